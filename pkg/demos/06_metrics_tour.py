# Tour of the image-quality metrics and the combined loss.
#
# Shows PSNR/SSIM/MS-SSIM/RMSE/MAE responding to increasing Gaussian noise
# and how the combined objective (-alpha*PSNR + (1-alpha)*[beta*(1-MS-SSIM)
# + (1-beta)*L1]) collapses to its parts at alpha in {0, 1}.

import warnings

import numpy as np

from tomokit.metrics import LossConfig, combo_loss, mae, ms_ssim, psnr, rmse, ssim

rng = np.random.default_rng(0)
yy, xx = np.meshgrid(np.arange(256), np.arange(256), indexing="ij")
base = 0.5 + 0.3 * np.sin(xx / 9.0) * np.cos(yy / 13.0)
base += 0.2 * (np.hypot(xx - 128, yy - 128) < 40)
base = np.clip(base, 0.0, 1.0)

print(f"{'sigma':>6s} {'rmse':>8s} {'mae':>8s} {'psnr':>8s} "
      f"{'ssim':>7s} {'ms-ssim':>8s} {'combo':>8s}")
for sigma in (0.0, 0.01, 0.05, 0.1, 0.2):
    noisy = np.clip(base + rng.normal(0.0, sigma, base.shape), 0.0, 1.0)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        print(f"{sigma:6.2f} {rmse(noisy, base):8.4f} {mae(noisy, base):8.4f} "
              f"{psnr(noisy, base, 1.0):8.2f} {ssim(noisy, base):7.4f} "
              f"{ms_ssim(noisy, base):8.4f} {combo_loss(noisy, base):8.3f}")

noisy = np.clip(base + rng.normal(0.0, 0.05, base.shape), 0.0, 1.0)
with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    print("\ncombo_loss collapse checks:")
    print(f"  alpha=1          -> {combo_loss(noisy, base, LossConfig(alpha=1.0)):.4f}"
          f"  (-psnr = {-psnr(noisy, base, 1.0):.4f})")
    print(f"  alpha=0, beta=1  -> {combo_loss(noisy, base, LossConfig(alpha=0.0, beta=1.0)):.4f}"
          f"  (1 - ms_ssim = {1.0 - ms_ssim(noisy, base):.4f})")
