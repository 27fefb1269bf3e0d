"""Exit 0 iff every file named on the command line parses as exactly one
undirected DOT graph."""

import sys
import warnings

warnings.simplefilter("ignore")

import pydot  # noqa: E402


def main(paths):
    for path in paths:
        graphs = pydot.graph_from_dot_file(path)
        if not graphs or len(graphs) != 1 or graphs[0].get_type() != "graph":
            print(f"{path}: not a single undirected DOT graph", file=sys.stderr)
            return 1
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
