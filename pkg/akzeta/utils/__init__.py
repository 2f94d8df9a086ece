from .formatting import format_runtime, format_value

__all__ = ["format_runtime", "format_value"]
