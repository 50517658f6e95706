"""Writing a dendrogram as JSON, Newick and SVG, and reading the JSON back."""
import tempfile
from pathlib import Path

from coursecluster import (Linkage, cluster_nn_chain, dendrogram_to_json, dendrogram_to_newick,
                           extract_items, json_to_dendrogram, matrix_to_csv, pairwise,
                           parse_csv, render_svg)
from coursecluster.synth import category_columns, generate

out = Path(tempfile.mkdtemp(prefix="coursecluster-"))

# CSV is the only input format; a round trip through text keeps every value.
survey = generate(seed=42).select_columns(category_columns()["study_program"])
(out / "study_program.csv").write_text(matrix_to_csv(survey))
table = parse_csv((out / "study_program.csv").read_bytes())
assert (table.values == survey.values).all()

tree = cluster_nn_chain(pairwise(extract_items(table)), Linkage.COMPLETE)

(out / "tree.json").write_text(dendrogram_to_json(tree))
assert json_to_dendrogram((out / "tree.json").read_text()) == tree

newick = dendrogram_to_newick(tree)
(out / "tree.nwk").write_text(newick + "\n")
print("newick:", newick)

(out / "tree.svg").write_text(render_svg(tree, width=600, height=400))
(out / "tree_horizontal.svg").write_text(render_svg(tree, 500, 400, "horizontal"))

print("files written to", out)
for p in sorted(out.iterdir()):
    print(f"  {p.name:22} {p.stat().st_size:6d} bytes")
