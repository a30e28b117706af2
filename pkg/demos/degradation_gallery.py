"""Walk through the degradation synthesizer on a handful of shapes images.

Synthesizes a few clean scenes, runs the two-round blur/resize/noise/jpeg
pipeline, and writes side-by-side panels plus one recipe dump so you can see
exactly what was applied. Everything lands in demos/out/degradation_gallery.

Equivalent CLI:
    rass synth --out ds --n-train 4 --n-val 0
    rass degrade --manifest ds/manifest.json --out ds_lq
"""
import json
from pathlib import Path

import numpy as np
from PIL import Image

from rass.datakit import ShapesConfig, generate_shapes_dataset, load_pair
from rass.degrade import DegradeConfig, degrade_manifest, upsample

out_root = Path(__file__).parent / "out" / "degradation_gallery"
out_root.mkdir(parents=True, exist_ok=True)

cfg = ShapesConfig(n_train=4, n_val=0)
hq_manifest = generate_shapes_dataset(cfg, seed=21, out_dir=out_root / "ds")
lq_manifest = degrade_manifest(hq_manifest, seed=22, out_dir=out_root / "ds_lq",
                               config=DegradeConfig(final_scale=2))

for rec in lq_manifest.records:
    pair = load_pair(lq_manifest, rec)
    lq_up = upsample(pair.lq, lq_manifest.scale)
    panel = np.concatenate([pair.hq, lq_up], axis=1)
    img = Image.fromarray(np.round(panel * 255).astype(np.uint8))
    img.save(out_root / f"{rec.id}_hq_vs_lq.png")

recipe_path = next((out_root / "ds_lq" / "recipes").glob("*.json"))
recipe = json.loads(recipe_path.read_text())
print(f"wrote {len(lq_manifest.records)} panels to {out_root}")
print(f"one recipe ({recipe_path.name}):")
for stage in recipe["stages"]:
    print(f"  {stage}")
