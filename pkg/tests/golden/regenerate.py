"""Rewrite the expected stdout files from the current implementation.

    python tests/golden/regenerate.py

Review the diff before committing: these files are the reference.
"""
import json
import pathlib

from symf.cli import run_command

HERE = pathlib.Path(__file__).parent


def main():
    cases = json.loads((HERE / "cases.json").read_text(encoding="utf-8"))
    for case in cases:
        code, out, _ = run_command(case["argv"])
        if code != case["exit"]:
            print("exit code %d != %d for %s" % (code, case["exit"], case["name"]))
        (HERE / (case["name"] + ".out")).write_text(out, encoding="utf-8")


if __name__ == "__main__":
    main()
