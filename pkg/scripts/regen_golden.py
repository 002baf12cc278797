"""Regenerate tests/golden/*.out from tests/golden/cases.json.

Only run this after checking that a behaviour change is intended; the test
suite compares CLI output byte-for-byte against these files.
"""

import contextlib
import io
import json
import pathlib

from kostka_degree.cli import main

GOLDEN = pathlib.Path(__file__).resolve().parent.parent / "tests" / "golden"


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        try:
            code = main(argv)
        except SystemExit as exc:
            code = exc.code
    return code, out.getvalue()


def regen():
    cases = json.loads((GOLDEN / "cases.json").read_text())
    for name, case in sorted(cases.items()):
        code, out = run(case["argv"])
        status = "ok" if code == case["exit"] else f"EXIT {code} != {case['exit']}"
        (GOLDEN / f"{name}.out").write_text(out)
        print(f"{name:28s} {status}")


if __name__ == "__main__":
    regen()
