from .evaluate import EvalResult, build_objects, evaluate  # noqa: F401
from .parser import parse, tokenize  # noqa: F401
from .syntax import Expr, MapDecl, Program, SetDecl, format_program  # noqa: F401
