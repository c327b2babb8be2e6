"""Periodic rectangular lattice on the 4-torus with spectral derivatives."""

import os
from dataclasses import dataclass
from functools import cached_property

import numpy as np
import scipy.fft as sfft


def fft_workers():
    """Worker count for batched transforms, capped by HSFLOW_THREADS."""
    n = os.cpu_count() or 1
    cap = os.environ.get("HSFLOW_THREADS")
    if cap:
        try:
            n = max(1, min(n, int(cap)))
        except ValueError:
            pass
    return n


@dataclass(frozen=True)
class Grid4:
    """Uniform periodic grid: dims (N1..N4), lengths (L1..L4), h_a = L_a/N_a."""

    dims: tuple
    lengths: tuple = (2 * np.pi,) * 4

    def __post_init__(self):
        dims = tuple(int(n) for n in self.dims)
        lengths = tuple(float(l) for l in self.lengths)
        if len(dims) != 4 or len(lengths) != 4:
            raise ValueError("Grid4 needs four dims and four lengths")
        for n in dims:
            if n < 4 or n % 2:
                raise ValueError(f"grid size {n} must be even and at least 4")
        for l in lengths:
            if not l > 0:
                raise ValueError("grid lengths must be positive")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "lengths", lengths)

    @property
    def spacings(self):
        return tuple(l / n for l, n in zip(self.lengths, self.dims))

    @property
    def npoints(self):
        n1, n2, n3, n4 = self.dims
        return n1 * n2 * n3 * n4

    @property
    def cell_volume(self):
        h1, h2, h3, h4 = self.spacings
        return h1 * h2 * h3 * h4

    @cached_property
    def coords(self):
        """Four 1d coordinate arrays x_a = (0, h_a, ..., L_a - h_a)."""
        return tuple(np.arange(n) * h for n, h in zip(self.dims, self.spacings))

    def mesh(self, axis):
        """Coordinate field of one axis, broadcast to the full grid shape."""
        shape = [1] * 4
        shape[axis] = self.dims[axis]
        return np.broadcast_to(self.coords[axis].reshape(shape), self.dims)

    @cached_property
    def _ik(self):
        """Spectral derivative multipliers i*k per axis (rfft layout).

        The Nyquist-mode derivative is set to zero so that derivatives of
        real data stay real and the parity symmetry of the sampled
        interpolant is preserved.
        """
        out = []
        for n, h in zip(self.dims, self.spacings):
            k = 2 * np.pi * sfft.rfftfreq(n, d=h)
            ik = 1j * k
            ik[-1] = 0.0  # Nyquist bin of an even-length transform
            out.append(ik)
        return tuple(out)

    def deriv(self, data, axis):
        """Partial derivative along grid axis 0..3 by Fourier collocation.

        `data` has the four grid axes last; any leading axes are batched.
        """
        ax = data.ndim - 4 + axis
        spec = sfft.rfft(data, axis=ax, workers=fft_workers())
        shape = [1] * data.ndim
        shape[ax] = -1
        spec *= self._ik[axis].reshape(shape)
        return sfft.irfft(spec, n=self.dims[axis], axis=ax, workers=fft_workers())

    def grad(self, data):
        """All four axis derivatives, stacked on a new leading axis."""
        return np.stack([self.deriv(data, a) for a in range(4)])

    @cached_property
    def _dealias_mask(self):
        """Two-thirds-rule spectral mask (True = keep), rfft layout last axis."""
        masks = []
        for n in self.dims:
            freqs = np.abs(np.fft.fftfreq(n, d=1.0 / n))
            masks.append(freqs <= n / 3.0)
        masks[-1] = np.abs(np.arange(self.dims[3] // 2 + 1)) <= self.dims[3] / 3.0
        m = np.ones(self.dims[:3] + (self.dims[3] // 2 + 1,), dtype=bool)
        for a, keep in enumerate(masks):
            shape = [1] * 4
            shape[a] = -1
            m &= keep.reshape(shape)
        return m

    def dealias(self, data):
        """Project fields onto the 2/3-rule band (for sensitivity studies)."""
        axes = tuple(range(data.ndim - 4, data.ndim))
        spec = sfft.rfftn(data, axes=axes, workers=fft_workers())
        spec *= self._dealias_mask
        return sfft.irfftn(spec, s=self.dims, axes=axes, workers=fft_workers())

    def compatible(self, other):
        return self.dims == other.dims and self.lengths == other.lengths
