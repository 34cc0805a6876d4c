"""Extracts the GCM table (algebra, matrix, type column, label) from the
LaTeX source into crates/core/data/gcm_table.tsv.

Run: python3 tools/extract_table2.py <latex-source.md>
"""
import re
import sys

COLUMNS = ["finite", "affine", "hyperbolic", "nonhyperbolic"]


def rows_of(text):
    start = text.index("Kac-Moody types for indecomposable nilpotent Lie algebras of dimension $\\leq 7.$")
    body = text[start:]
    out = []
    for chunk in re.split(r"\n[ \t]*\\\\", body):
        if "textbf" in chunk or "mathfrak" not in chunk:
            continue
        head_end = chunk.find("\n&")
        if head_end < 0:
            continue
        head = chunk[:head_end]
        m = re.search(r"mathfrak\{g\}_\{([^\n$]*)\}", head)
        if not m:
            continue
        name = m.group(1).strip()
        dagger = "ddagger" in head
        extra = head[m.end():].replace("{ }^{\\ddagger}", "").replace("$", "").strip()
        cells = re.split(r"\n\s*&", chunk[head_end:])
        cells = cells[1:]
        if not cells:
            continue
        mat_cell, type_cells = cells[0], cells[1:]
        mm = re.search(r"begin\{smallmatrix\}(.*?)\\end\{smallmatrix\}", mat_cell, re.S)
        if mm:
            rows = [r.strip() for r in mm.group(1).strip().split("\\\\")]
            matrix = ";".join(",".join(x.strip() for x in r.split("&")) for r in rows)
        elif "ditto" in mat_cell:
            matrix = "ditto"
        else:
            continue
        col, label = "", ""
        for idx, c in enumerate(type_cells[:4]):
            c = c.strip()
            if c:
                col, label = COLUMNS[idx], c
        out.append([name + (" " + extra if extra else ""), matrix, col, label, "1" if dagger else "0"])
    # Resolve dittos.
    prev = None
    for r in out:
        if r[1] == "ditto":
            r[1] = prev[1]
        if "ditto" in r[3]:
            r[2], r[3] = prev[2], prev[3]
        prev = r
    return out


if __name__ == "__main__":
    text = open(sys.argv[1]).read()
    rows = rows_of(text)
    with open("crates/core/data/gcm_table.tsv", "w") as f:
        f.write("# algebra\tgcm\tcolumn\tlabel\tdegenerate_weights\n")
        for r in rows:
            f.write("\t".join(r) + "\n")
    print(len(rows), "rows")
