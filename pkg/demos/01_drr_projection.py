# Render digitally reconstructed radiographs (DRRs) of a synthetic volume.
#
# Builds a two-sphere phantom, casts rays from a rotating point source
# through it, and writes both raw line-integral images and transmission
# (exp(-integral)) images for a handful of poses. Outputs land in
# demos/out/01/ as RVF files plus PGM previews you can open directly.

import math
import os

from tomokit import geometry as geo
from tomokit.projector import SamplerConfig, project
from tomokit.volume import export_pgm, make_ellipsoid_phantom, save_image

out_dir = os.path.join(os.path.dirname(__file__), "out", "01")
os.makedirs(out_dir, exist_ok=True)

vol = make_ellipsoid_phantom(
    [{"center": (-12.0, 6.0, 0.0), "semi_axes": (16.0, 16.0, 16.0), "value": 1.0},
     {"center": (14.0, -8.0, 4.0), "semi_axes": (10.0, 10.0, 10.0), "value": 0.6},
     {"center": (0.0, 0.0, -14.0), "semi_axes": (20.0, 12.0, 6.0), "value": 0.35}],
    dims=(64, 64, 64), spacing=(1.5, 1.5, 1.5), supersample=2)

g = geo.Geometry(d1=600.0, d2=1000.0, det_nu=128, det_nv=128, du=1.6, dv=1.6)
sampler = SamplerConfig(q=256, stratified=True, seed=0)

for theta_deg in (0, 45, 90):
    pose = geo.Pose(math.radians(theta_deg), 0.0)
    drr = project(vol, g, pose, sampler)
    trans = project(vol, g, pose, sampler, transmission=True)
    base = os.path.join(out_dir, f"drr_{theta_deg:03d}")
    save_image(drr, base + ".rvf", tag="projection", geometry=g)
    export_pgm(drr, base + ".pgm")
    export_pgm(trans, base + "_transmission.pgm")
    print(f"theta={theta_deg:3d}deg  integral range "
          f"[{drr.data.min():.2f}, {drr.data.max():.2f}] mm*density")

print(f"wrote projections to {out_dir}")
