"""Smoke test for the ncmotives_py extension.

Build and import it with one of:
    maturin develop -m crates/python/Cargo.toml --features extension-module
    cargo build -p ncmotives-python --features extension-module \
        && cp target/debug/libncmotives_py.so python/ncmotives_py.so
then run `python python/smoke_test.py`.
"""

import json
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import ncmotives_py as nm

DATA = os.path.join(os.path.dirname(__file__), "..", "crates", "core", "data")


def main():
    assert nm.euler_matrix('"A2"') == [[1, -1], [0, 1]]
    assert nm.euler_matrix('"Kronecker"') == [[1, -2], [0, 1]]

    quiver = {"vertices": 3, "arrows": [{"from": 0, "to": 1, "label": "a"}, {"from": 1, "to": 2, "label": "b"}]}
    assert nm.euler_matrix(json.dumps(quiver)) == [[1, -1, 0], [0, 1, -1], [0, 0, 1]]

    start, dims = nm.hochschild('"A2xA2"')
    assert (start, dims[0]) == (0, 4) and not any(dims[1:])

    try:
        nm.euler_matrix(json.dumps({"vertices": 1, "arrows": [{"from": 0, "to": 0, "label": "x"}]}))
    except ValueError:
        pass
    else:
        raise AssertionError("cyclic quiver accepted")

    code, out, _ = nm.run(["euler-matrix", os.path.join(DATA, "kronecker.json")])
    assert code == 0 and json.loads(out)["data"]["determinant"] == "1"
    code, _, _ = nm.run(["verify", os.path.join(DATA, "kronecker_iso.json")])
    assert code == 1

    print("ncmotives_py", nm.__version__, "smoke test passed")


if __name__ == "__main__":
    main()
