# Fit a neural density field to a handful of X-ray views.
#
# A coordinate MLP conditioned on pose and two latent codes is optimized
# with RMSprop against rendered reference projections of a two-sphere
# phantom (the loss mixes MSE, -PSNR and 1 - MS-SSIM). After fitting, the
# script renders an unseen pose and extracts the density volume for
# comparison with the phantom. Takes a few minutes on a laptop CPU; lower
# N_VIEWS or MAX_ITERS for a quicker look.

import math
import os

import torch

from tomokit import field as fd
from tomokit import geometry as geo
from tomokit.metrics import psnr
from tomokit.projector import SamplerConfig, project
from tomokit.volume import Image2, bounding_box, export_pgm, \
    make_ellipsoid_phantom, save_volume

N_VIEWS = 10
MAX_ITERS = 800

out_dir = os.path.join(os.path.dirname(__file__), "out", "04")
os.makedirs(out_dir, exist_ok=True)
torch.set_num_threads(max(1, os.cpu_count() or 1))

vol = make_ellipsoid_phantom(
    [{"center": (-9.0, 5.0, 0.0), "semi_axes": (13.0,) * 3, "value": 1.0},
     {"center": (12.0, -6.0, 3.0), "semi_axes": (8.5,) * 3, "value": 0.6}],
    (32, 32, 32), (2.0,) * 3, supersample=2)
box = bounding_box(vol)
g = geo.Geometry(d1=600.0, d2=1000.0, det_nu=24, det_nv=24, du=5.4, dv=5.4)

poses = [geo.Pose(math.radians(360.0 * k / N_VIEWS), 0.0) for k in range(N_VIEWS)]
proj_cfg = SamplerConfig(q=192, stratified=False)
views = [(p, project(vol, g, p, proj_cfg)) for p in poses]
peak = max(float(v.data.max()) for _, v in views)
views = [(p, Image2(v.data / peak)) for p, v in views]

net = fd.FieldNetwork(dtype=torch.float32, seed=0)
codes = fd.LatentCodes(seed=1, dtype=torch.float32)
cfg = fd.FitConfig(max_iters=MAX_ITERS, seed=0)  # stop at PSNR 25 or budget
net, codes, log = fd.fit(net, codes, views, g, box, cfg,
                         SamplerConfig(q=48, stratified=True, seed=0))
print(f"fit stopped after {len(log)} iterations "
      f"(loss {log[-1][1]:.3f}, view PSNR {log[-1][2]:.2f} dB)")

held_pose = geo.Pose(math.radians(360.0 / N_VIEWS / 2), 0.0)
held = Image2(project(vol, g, held_pose, proj_cfg).data / peak)
rend = fd.render_projection(net, g, held_pose, codes,
                            SamplerConfig(q=96, stratified=False), box)
print(f"unseen-pose PSNR: "
      f"{psnr(rend.data, held.data, max_val=float(held.data.max())):.2f} dB")

ext = fd.extract_volume(net, codes, (32, 32, 32), box)
save_volume(ext, os.path.join(out_dir, "fitted_volume.rvf"))
export_pgm(ext, os.path.join(out_dir, "fitted_volume_midslice.pgm"))
export_pgm(rend, os.path.join(out_dir, "unseen_pose_render.pgm"))
export_pgm(held, os.path.join(out_dir, "unseen_pose_reference.pgm"))
fd.save_checkpoint(net, codes, os.path.join(out_dir, "field.nfc"), box=box)
print(f"wrote volume, renders and checkpoint to {out_dir}")
