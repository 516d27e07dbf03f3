"""QPSK synthesis, root-raised-cosine pulse shaping, matched filtering, metrics.

Conventions used throughout:

* waveforms are 1-d complex128 arrays of baseband samples,
* bit sequences are 1-d uint8 arrays over {0, 1},
* `rrc_taps` returns unit-energy taps; `modulate` applies a fixed transmit
  gain of sqrt(sps) so the shaped stream has unit average power, and
  `matched_filter` applies the complementary 1/sqrt(sps) so the cascade has
  unity gain at symbol centers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import signal as sp_signal

from .errors import ParameterError, ShapeError

# Gray-mapped QPSK, index = 2*b0 + b1: real sign from b0, imag sign from b1.
QPSK_CONSTELLATION = np.array(
    [1 + 1j, 1 - 1j, -1 + 1j, -1 - 1j], dtype=np.complex128
) / np.sqrt(2.0)

# Above this length, convolution switches to the FFT path (same result to 1e-9).
_FFT_CONV_THRESHOLD = 4096


@dataclass(frozen=True)
class RrcParams:
    """Root-raised-cosine pulse parameters (roll-off, span in symbols, samples/symbol)."""

    rolloff: float = 0.5
    span: int = 8
    sps: int = 16

    def __post_init__(self):
        if not (0.0 < self.rolloff <= 1.0):
            raise ParameterError(f"rolloff must be in (0, 1], got {self.rolloff}")
        if self.span < 2:
            raise ParameterError(f"span must be >= 2 symbols, got {self.span}")
        if self.sps < 2:
            raise ParameterError(f"sps must be >= 2, got {self.sps}")

    @property
    def delay(self) -> int:
        """Group delay of the filter in samples (span/2 symbols)."""
        return self.span * self.sps // 2


def rrc_taps(params: RrcParams) -> np.ndarray:
    """Unit-energy root-raised-cosine taps of length span*sps + 1."""
    beta = params.rolloff
    n = np.arange(-params.delay, params.delay + 1)
    t = n / params.sps  # time in symbol units
    taps = np.zeros_like(t)

    at_zero = n == 0
    taps[at_zero] = 1.0 - beta + 4.0 * beta / np.pi

    # removable singularity at t = +-1/(4*beta)
    at_sing = np.isclose(np.abs(t), 1.0 / (4.0 * beta), rtol=0.0, atol=1e-12)
    taps[at_sing] = (beta / np.sqrt(2.0)) * (
        (1.0 + 2.0 / np.pi) * np.sin(np.pi / (4.0 * beta))
        + (1.0 - 2.0 / np.pi) * np.cos(np.pi / (4.0 * beta))
    )

    rest = ~(at_zero | at_sing)
    tr = t[rest]
    taps[rest] = (
        np.sin(np.pi * tr * (1.0 - beta))
        + 4.0 * beta * tr * np.cos(np.pi * tr * (1.0 + beta))
    ) / (np.pi * tr * (1.0 - (4.0 * beta * tr) ** 2))

    return taps / np.sqrt(np.sum(taps**2))


def map_bits_to_qpsk(bits: np.ndarray) -> np.ndarray:
    """Gray-map a bit sequence (even length) to unit-energy QPSK symbols."""
    bits = np.asarray(bits)
    if bits.ndim != 1 or bits.size % 2 != 0:
        raise ShapeError(f"QPSK payload needs an even-length bit vector, got shape {bits.shape}")
    if bits.size and not np.isin(bits, (0, 1)).all():
        raise ShapeError("bits must be over {0, 1}")
    idx = 2 * bits[0::2].astype(np.intp) + bits[1::2].astype(np.intp)
    return QPSK_CONSTELLATION[idx]


def demap_qpsk(symbols: np.ndarray) -> np.ndarray:
    """Nearest-symbol decision + Gray demap; inverse of map_bits_to_qpsk on clean input."""
    symbols = np.asarray(symbols)
    bits = np.empty(2 * symbols.size, dtype=np.uint8)
    bits[0::2] = symbols.real < 0
    bits[1::2] = symbols.imag < 0
    return bits


def convolve(x: np.ndarray, taps: np.ndarray, force_direct: bool = False) -> np.ndarray:
    """Full convolution; uses the FFT path for long inputs (identical to 1e-9)."""
    if force_direct or len(x) < _FFT_CONV_THRESHOLD:
        return np.convolve(x, taps, mode="full")
    return sp_signal.fftconvolve(x, taps, mode="full")


def modulate(symbols: np.ndarray, params: RrcParams) -> np.ndarray:
    """Pulse-shape symbols at sps samples/symbol; unit average power output.

    Output length is len(symbols)*sps with the filter group delay trimmed,
    so symbol p is centered at sample p*sps.
    """
    symbols = np.asarray(symbols, dtype=np.complex128)
    if symbols.size < 1:
        raise ShapeError("modulate needs at least one symbol")
    taps = rrc_taps(params)
    up = np.zeros(symbols.size * params.sps, dtype=np.complex128)
    up[:: params.sps] = symbols
    full = convolve(up, taps)
    out = full[params.delay : params.delay + up.size]
    return out * np.sqrt(params.sps)


def matched_filter(y: np.ndarray, params: RrcParams) -> np.ndarray:
    """Receive-side RRC filtering with the same group-delay convention as modulate."""
    y = np.asarray(y, dtype=np.complex128)
    if y.size == 0:
        return y.copy()
    taps = rrc_taps(params) / np.sqrt(params.sps)
    full = convolve(y, taps)
    return full[params.delay : params.delay + y.size]


def mf_symbols(y: np.ndarray, params: RrcParams, symbol_offset: int = 0) -> np.ndarray:
    """Matched-filter y and sample the symbol decision points at offset + p*sps."""
    if not (0 <= symbol_offset < params.sps):
        raise ParameterError(f"symbol_offset must be in [0, sps), got {symbol_offset}")
    filtered = matched_filter(y, params)
    return filtered[symbol_offset :: params.sps]


def demodulate(y: np.ndarray, params: RrcParams, symbol_offset: int = 0) -> np.ndarray:
    """Matched-filter, sample at symbol centers, hard QPSK decisions, Gray demap."""
    return demap_qpsk(mf_symbols(y, params, symbol_offset))


def ber(a: np.ndarray, b: np.ndarray) -> float:
    """Bit error rate: Hamming distance / length."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise ShapeError(f"bit sequences differ in shape: {a.shape} vs {b.shape}")
    if a.size == 0:
        raise ShapeError("ber needs at least one bit")
    return float(np.mean(a != b))


def mse_db(est: np.ndarray, ref: np.ndarray) -> float:
    """Normalized MSE in dB: 10*log10(mean|est-ref|^2 / mean|ref|^2); -inf if exact."""
    est = np.asarray(est)
    ref = np.asarray(ref)
    if est.shape != ref.shape:
        raise ShapeError(f"waveforms differ in shape: {est.shape} vs {ref.shape}")
    ref_power = float(np.mean(np.abs(ref) ** 2))
    if ref_power == 0.0:
        raise ShapeError("reference waveform has zero power")
    err_power = float(np.mean(np.abs(est - ref) ** 2))
    if err_power == 0.0:
        return float("-inf")
    return 10.0 * np.log10(err_power / ref_power)


def waveform_power(x: np.ndarray) -> float:
    """Mean per-sample power of a waveform."""
    x = np.asarray(x)
    if x.size == 0:
        raise ShapeError("empty waveform has no power")
    return float(np.mean(np.abs(x) ** 2))
