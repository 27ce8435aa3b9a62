from ._syntaft import *  # noqa: F401,F403
from ._syntaft import Error, ParseError, load, run_cli  # noqa: F401


def load_file(path):
    with open(path, encoding="utf-8") as fh:
        return load(fh.read())
