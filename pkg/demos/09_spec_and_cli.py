"""Reading a spec file and driving the command line from Python."""

from pathlib import Path

from forcinglab.cli import run_cli
from forcinglab.specfile import format_spec, load_spec

spec_path = Path(__file__).parent / "specs" / "cohen2.fs"
spec = load_spec(spec_path)
print(format_spec(spec))

for argv in [
    ["check", "--spec", str(spec_path), "--x-set", "two"],
    ["check", "--spec", str(spec_path), "--x-set", "three"],
    ["check", "--spec", str(spec_path), "--x", "{{{}}}"],
    ["lambda-star", "--spec", str(spec_path)],
    ["probe", "--spec", str(spec_path), "--x-set", "two", "--json"],
]:
    code, out = run_cli(argv)
    print("$ forcinglab", " ".join(argv[:1] + argv[3:]))
    print(out)
    print(f"(exit {code})")
    print()
