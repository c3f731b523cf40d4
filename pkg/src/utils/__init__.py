from src.utils.colors import Colors
from src.utils.errors import InvalidArgument, ShapeError, TooLarge, UnsupportedBox

__all__ = ["Colors", "InvalidArgument", "ShapeError", "TooLarge", "UnsupportedBox"]
