"""
Drawing the construction
========================

Writes two SVG figures next to this script: the parallelogram (a = b at
infinity) and the general case with b drawn as a dashed line.
"""
from pathlib import Path

from projtorsor.render import FigureSpec, construction, render_construction

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

flat = FigureSpec((0, 0), (2, 0), (1, 2))
bent = FigureSpec((1, 1), (2, 1), (1, 3), beta=(1, 0))

for name, fig in (("parallelogram", flat), ("general", bent)):
    pts = construction(fig)["points"]
    print(name, {k: tuple(str(c) for c in v) for k, v in pts.items()})
    (out / f"{name}.svg").write_text(render_construction(fig))
print("wrote", sorted(p.name for p in out.glob("*.svg")))
