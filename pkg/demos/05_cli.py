"""Driving the command-line tool from Python. Each call mirrors a shell invocation
such as ``nombind fa letrec.spec trm "(Let ...)"``."""
import json

from nombind import corpus
from nombind.cli import run

calls = [
    ["check", str(corpus.path("baz1"))],
    ["alpha", str(corpus.path("tysch")), "tsc",
     "(TAll {x, y} (TFun (TVar x) (TVar y)))", "(TAll {x, y} (TFun (TVar y) (TVar x)))"],
    ["fa", str(corpus.path("letrec")), "trm", "(Let (ACons x (Var x) ANil) (Var x))"],
    ["permute", str(corpus.path("lam")), "lam", "(Lam x (Var x))", "(x y)"],
]
for argv in calls:
    result = run(argv)
    print("$ nombind", " ".join(argv[:1] + [a if " " not in a else repr(a) for a in argv[1:]]))
    print(f"exit {result.code}:", json.dumps(result.to_json()))
