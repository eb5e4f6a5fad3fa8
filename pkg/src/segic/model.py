"""Gaussian interference channel (GIC) game model.

An instance describes N transmitter-receiver pairs sharing a band. Each
transmitter i picks a power p_i in [0, p_max] and wants its Shannon rate

    u_i(p) = 1/2 * log2(1 + p_i / (sum_{j != i} a[j, i] * p_j + noise_i))

to reach a QoS threshold gamma_i. Attenuations are stored with the
convention a[j, i] = gain from transmitter j to receiver i, normalized so
the direct gains a[i, i] are 1 (and never read by the formulas).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

#: comparison tolerance for satisfaction predicates (closed forms in doubles)
SAT_TOL = 1e-12


class InvalidInputError(ValueError):
    """Raised when channel or game data violates its invariants."""


def _as_matrix(values, name: str) -> np.ndarray:
    m = np.asarray(values, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InvalidInputError(f"{name} must be a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise InvalidInputError(f"{name} contains non-finite entries")
    return m


def _as_vector(values, name: str) -> np.ndarray:
    v = np.asarray(values, dtype=float)
    if v.ndim != 1:
        raise InvalidInputError(f"{name} must be one-dimensional")
    if not np.all(np.isfinite(v)):
        raise InvalidInputError(f"{name} contains non-finite entries")
    return v


@dataclass(frozen=True)
class RawChannel:
    """Unnormalized channel: raw gains h[j, i] > 0 and common AWGN power."""

    h: np.ndarray
    awgn: float

    def __post_init__(self):
        h = _as_matrix(self.h, "h")
        bad = np.argwhere(h <= 0.0)
        if bad.size:
            j, i = bad[0]
            raise InvalidInputError(f"h[{j},{i}] = {h[j, i]} must be > 0")
        if not (np.isfinite(self.awgn) and self.awgn > 0.0):
            raise InvalidInputError(f"awgn = {self.awgn} must be > 0")
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "awgn", float(self.awgn))

    @property
    def n(self) -> int:
        return self.h.shape[0]


@dataclass(frozen=True)
class GameSpec:
    """Normalized GIC game in satisfaction form.

    attenuation[j, i] is the normalized gain from transmitter j to
    receiver i (diagonal fixed to 1), noise[i] the normalized noise at
    receiver i, thresholds[i] the rate target gamma_i (bits/channel use,
    base-2 log), and p_max the common power cap.
    """

    attenuation: np.ndarray
    noise: np.ndarray
    thresholds: np.ndarray
    p_max: float

    def __post_init__(self):
        a = _as_matrix(self.attenuation, "attenuation")
        n = a.shape[0]
        noise = _as_vector(self.noise, "noise")
        thresholds = _as_vector(self.thresholds, "thresholds")
        if noise.shape != (n,) or thresholds.shape != (n,):
            raise InvalidInputError(
                f"noise/thresholds must have length {n}, got "
                f"{noise.shape[0]} and {thresholds.shape[0]}"
            )
        if not np.allclose(np.diag(a), 1.0, rtol=0.0, atol=1e-12):
            raise InvalidInputError("attenuation diagonal must be 1")
        off = a[~np.eye(n, dtype=bool)]
        if np.any(off < 0.0):
            raise InvalidInputError("off-diagonal attenuations must be >= 0")
        if np.any(noise <= 0.0):
            i = int(np.argmin(noise))
            raise InvalidInputError(f"noise[{i}] = {noise[i]} must be > 0")
        if np.any(thresholds < 0.0):
            i = int(np.argmin(thresholds))
            raise InvalidInputError(f"thresholds[{i}] = {thresholds[i]} must be >= 0")
        if not (np.isfinite(self.p_max) and self.p_max > 0.0):
            raise InvalidInputError(f"p_max = {self.p_max} must be positive and finite")
        a = a.copy()
        np.fill_diagonal(a, 1.0)
        object.__setattr__(self, "attenuation", a)
        object.__setattr__(self, "noise", noise)
        object.__setattr__(self, "thresholds", thresholds)
        object.__setattr__(self, "p_max", float(self.p_max))

    @property
    def n(self) -> int:
        return self.attenuation.shape[0]

    @property
    def gamma_factor(self) -> np.ndarray:
        """Per-player factor 4**gamma_i - 1 appearing in all SE inequalities."""
        return 4.0 ** self.thresholds - 1.0


def normalize(raw: RawChannel) -> tuple[np.ndarray, np.ndarray]:
    """Normalize raw gains: a[j, i] = h[j, i] / h[i, i], noise_i = awgn / h[i, i]."""
    direct = np.diag(raw.h)
    a = raw.h / direct[np.newaxis, :]
    np.fill_diagonal(a, 1.0)
    noise = raw.awgn / direct
    return a, noise


def game_from_raw(raw: RawChannel, thresholds, p_max: float) -> GameSpec:
    a, noise = normalize(raw)
    return GameSpec(attenuation=a, noise=noise, thresholds=thresholds, p_max=p_max)


def validate_profile(game: GameSpec, p, tol: float = SAT_TOL) -> np.ndarray:
    """Check a power profile against the strategy sets [0, p_max]^n."""
    p = _as_vector(p, "power profile")
    if p.shape != (game.n,):
        raise InvalidInputError(f"profile length {p.shape[0]} != {game.n} players")
    if np.any(p < -tol) or np.any(p > game.p_max + tol):
        i = int(np.argmax(np.maximum(-p, p - game.p_max)))
        raise InvalidInputError(f"p[{i}] = {p[i]} outside [0, {game.p_max}]")
    return p


def interference(game: GameSpec, p) -> np.ndarray:
    """Per-receiver interference-plus-noise sum_{j != i} a[j, i] p_j + noise_i."""
    p = np.asarray(p, dtype=float)
    return p @ game.attenuation - p + game.noise


def utilities(game: GameSpec, p) -> np.ndarray:
    """Achieved rates of all players at profile p (bits/channel use)."""
    p = np.asarray(p, dtype=float)
    return 0.5 * np.log2(1.0 + p / interference(game, p))


def utility(game: GameSpec, i: int, p) -> float:
    """Achieved rate of player i at profile p."""
    return float(utilities(game, p)[i])


def raw_utility(raw: RawChannel, i: int, p) -> float:
    """Rate of player i computed directly from raw gains (pre-normalization form)."""
    p = np.asarray(p, dtype=float)
    others = p * raw.h[:, i]
    denom = others.sum() - others[i] + raw.awgn
    return float(0.5 * np.log2(1.0 + raw.h[i, i] * p[i] / denom))


def min_satisfying_powers(game: GameSpec, p) -> np.ndarray:
    """Least power of each player reaching its threshold, others fixed at p.

    Entries may exceed p_max; callers decide feasibility.
    """
    return game.gamma_factor * interference(game, p)


def min_satisfying_power(game: GameSpec, i: int, p_others) -> float:
    """Least p_i with utility(i) >= gamma_i, given the powers of all j != i."""
    p_others = np.asarray(p_others, dtype=float)
    if p_others.shape != (game.n - 1,):
        raise InvalidInputError(
            f"expected {game.n - 1} other powers, got {p_others.shape[0]}"
        )
    full = np.insert(p_others, i, 0.0)
    return float(min_satisfying_powers(game, full)[i])


def is_satisfied(game: GameSpec, i: int, p, tol: float = SAT_TOL) -> bool:
    """True iff player i meets its threshold at p (within tol)."""
    return bool(utilities(game, p)[i] >= game.thresholds[i] - tol)


def satisfied_mask(game: GameSpec, p, tol: float = SAT_TOL) -> np.ndarray:
    """Boolean satisfaction vector over all players."""
    return utilities(game, p) >= game.thresholds - tol


def cost_ratio(game: GameSpec, i: int, p) -> float:
    """Power-to-rate tradeoff p_i / u_i(p), extended by its limit at p_i = 0.

    As p_i -> 0 the ratio tends to 2*ln(2) times the interference-plus-noise
    at receiver i, which keeps the ratio well-defined on zero-threshold games.
    """
    p = np.asarray(p, dtype=float)
    if p[i] == 0.0:
        return float(2.0 * np.log(2.0) * interference(game, p)[i])
    return float(p[i] / utilities(game, p)[i])
