"""Command-line distance reports over csv files and pattern-log folders.

Run: python demos/05_cli_and_pattern_logs.py
"""
import tempfile
from pathlib import Path

from relmetric import relation_from_matrix, save_relation
from relmetric.cli import main

work = Path(tempfile.mkdtemp())

# Dense csv: a header of observation labels, then one row per feature.
r1 = relation_from_matrix([[1, 0], [1, 0], [0, 1]], "abc")
r2 = relation_from_matrix([[1, 0], [0, 1], [0, 1]], "abc")
save_relation(r1, work / "r1.csv")
save_relation(r2, work / "r2.csv")
print((work / "r1.csv").read_text())

print("$ relmetric distance r1.csv r2.csv")
main(["distance", str(work / "r1.csv"), str(work / "r2.csv")])
# The bound reports 1 against an exact distance of 2: it can undershoot.
print("$ relmetric distance r1.csv r2.csv --mode bound --format csv")
main(["distance", str(work / "r1.csv"), str(work / "r2.csv"), "--mode", "bound", "--format", "csv"])
print("$ relmetric dowker r1.csv")
main(["dowker", str(work / "r1.csv")])

# A folder of logs becomes a relation: one feature per regex, one
# observation per file, related when the regex matches the file.
for name, logs in (("good", ["ok\n", "ok\nslow\n"]), ("bad", ["error 7\n", "error 9\nslow\n"])):
    d = work / name
    d.mkdir()
    for k, text in enumerate(logs):
        (d / f"run{k}.log").write_text(text)
(work / "patterns.txt").write_text("^ok$\nerror \\d+\nslow\n")
print("\n$ relmetric distance good bad --patterns patterns.txt")
main(["distance", str(work / "good"), str(work / "bad"), "--patterns", str(work / "patterns.txt")])
