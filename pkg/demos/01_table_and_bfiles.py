"""Reproduce the a(n, d) table for d = 0..3 and write OEIS-style b-files.

Run from the repository root:  python demos/01_table_and_bfiles.py
"""
import tempfile
import time
from pathlib import Path

from dconsec import count_exact
from dconsec.cli import format_table, write_bfile

# The dispatcher picks the circular closed form for d=0, Robbins' formula for
# d=1 and the residue-class sum for d>=2.  Sixteen rows take well under a second.
start = time.perf_counter()
print(format_table(16, [0, 1, 2, 3], fmt="markdown"))
print(f"computed in {time.perf_counter() - start:.3f}s")

# The same engines go well past the published range.
for n in (20, 24, 30):
    print(f"a({n}, 2) = {count_exact(n, 2)}")

# b-files: "n a(n)" per line, ascending n, no header.  A089222, A002464 and
# A110128 are the d = 0, 1, 2 columns.
out = Path(tempfile.mkdtemp())
for d, name in [(0, "A089222"), (1, "A002464"), (2, "A110128")]:
    path = out / f"b{name[1:]}.txt"
    write_bfile(path, d, 30)
    head = path.read_text().splitlines()[:6]
    print(name, "->", path, "|", "; ".join(head), "...")
