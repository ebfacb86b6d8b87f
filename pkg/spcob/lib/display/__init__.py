from .writer import Writer as Writer
from .writer import std as std
from .writer import test as test
