from seqalg.cli.evaluator import EvalMode, evaluate
from seqalg.cli.main import main
from seqalg.cli.syntax import parse, render

__all__ = ["EvalMode", "evaluate", "main", "parse", "render"]
