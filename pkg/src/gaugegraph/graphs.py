"""Ring graphs with distance-switched connectivity and non-reciprocal hopping.

A configuration is a ring of N sites where every ordered pair at ring
distance d = 1..N-1 may carry a hop: ascending-index hops carry the
forward amplitude, descending-index hops the backward one, and a binary
connectivity vector a_1..a_{N-1} switches each distance on or off.  Pure
geometric decay modes exist exactly when the vector is distance-symmetric,
a_d = a_{N-d}.  A gauge index k attaches a distance-proportional phase to
every hop; it acts as a unitary diagonal similarity, so it relabels which
decay mode is promoted without moving the eigenvalue set.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import ConfigurationError

__all__ = [
    "Pattern",
    "GraphSpec",
    "DecayValidity",
    "expand_pattern",
    "validate_pure_decay",
    "assemble_hamiltonian",
    "gauge_diagonal",
]


class Pattern(str, Enum):
    """Named connectivity patterns."""

    FCG = "fcg"        # fully connected graph: every distance active
    HCS = "hcs"        # half-connected state: odd distances only (bipartite)
    CUSTOM = "custom"  # caller-supplied binary vector


def _coerce_pattern(pattern) -> Pattern:
    if isinstance(pattern, Pattern):
        return pattern
    try:
        return Pattern(str(pattern).lower())
    except ValueError:
        raise ConfigurationError(f"unknown connectivity pattern {pattern!r}") from None


def expand_pattern(pattern, sites: int, connectivity=None) -> np.ndarray:
    """Binary connectivity vector a_1..a_{N-1} for `pattern` on `sites` nodes.

    `connectivity` is required (and returned verbatim, after validation) for
    Pattern.CUSTOM.  HCS demands an even site count: its odd-distance vector
    is distance-symmetric only then.
    """
    pattern = _coerce_pattern(pattern)
    if sites < 2:
        raise ConfigurationError(f"need at least 2 sites, got {sites}")
    if pattern is Pattern.FCG:
        return np.ones(sites - 1, dtype=int)
    if pattern is Pattern.HCS:
        if sites % 2:
            raise ConfigurationError(
                f"hcs requires an even site count (got {sites}): the odd-distance "
                "vector violates the pure-decay symmetry a_d = a_(N-d) for odd N"
            )
        return np.arange(1, sites, dtype=int) % 2
    if connectivity is None:
        raise ConfigurationError("custom pattern needs an explicit connectivity vector")
    conn = np.asarray(connectivity, dtype=int)
    if conn.shape != (sites - 1,):
        raise ConfigurationError(
            f"connectivity vector must have length sites-1 = {sites - 1}, got {conn.shape}"
        )
    if not np.isin(conn, (0, 1)).all():
        raise ConfigurationError("connectivity entries must be 0 or 1")
    if not conn.any():
        raise ConfigurationError("connectivity vector must switch on at least one distance")
    return conn


@dataclass(frozen=True)
class DecayValidity:
    """Result of the pure-decay symmetry check."""

    valid: bool
    violations: tuple[int, ...]  # distances d with a_d != a_(N-d), 1-based


def validate_pure_decay(connectivity) -> DecayValidity:
    """Check a_d = a_(N-d) for every distance d; never raises."""
    conn = np.asarray(connectivity, dtype=int)
    bad = [d for d in range(1, conn.size + 1) if conn[d - 1] != conn[conn.size - d]]
    return DecayValidity(valid=not bad, violations=tuple(bad))


@dataclass(frozen=True)
class GraphSpec:
    """One ring dimension: size, connectivity, hoppings and gauge index.

    `t_fwd` sits on ascending-index hops (upper matrix triangle), `t_bwd`
    on descending ones.  The derived ratio t = t_fwd/t_bwd sets the decay
    rate r (principal N-th root of 1/t) and the mode phase step
    theta = 2*pi/N.
    """

    sites: int
    pattern: Pattern = Pattern.FCG
    t_fwd: complex = 1.0
    t_bwd: complex = 1.0
    gauge: int = 0
    connectivity: tuple[int, ...] | None = None  # CUSTOM only

    def __post_init__(self):
        object.__setattr__(self, "pattern", _coerce_pattern(self.pattern))
        object.__setattr__(self, "t_fwd", complex(self.t_fwd))
        object.__setattr__(self, "t_bwd", complex(self.t_bwd))
        if self.sites < 2:
            raise ConfigurationError(f"need at least 2 sites, got {self.sites}")
        if self.t_bwd == 0:
            raise ConfigurationError("backward hopping must be nonzero")
        if self.t_fwd == 0:
            raise ConfigurationError("forward hopping must be nonzero (hopping ratio t = 0)")
        t = self.t_fwd / self.t_bwd
        if not np.isfinite([t.real, t.imag]).all():
            raise ConfigurationError("hopping ratio t = t_fwd/t_bwd must be finite")
        if not 0 <= self.gauge < self.sites:
            raise ConfigurationError(
                f"gauge index must lie in [0, {self.sites - 1}], got {self.gauge}"
            )
        if self.connectivity is not None:
            object.__setattr__(
                self, "connectivity", tuple(int(c) for c in self.connectivity)
            )
        # eagerly validate pattern/size/connectivity agreement
        expand_pattern(self.pattern, self.sites, self.connectivity)

    # -- derived quantities -------------------------------------------------

    @property
    def hopping_ratio(self) -> complex:
        return self.t_fwd / self.t_bwd

    @property
    def phase_step(self) -> float:
        """Winding phase quantum theta = 2*pi/N."""
        return 2.0 * np.pi / self.sites

    @property
    def decay_rate(self) -> complex:
        """Decay rate r = t**(-1/N) (principal power), so r**N = 1/t."""
        t = self.hopping_ratio
        if t.imag == 0.0:
            t = complex(t.real, 0.0)  # strip signed zero so the branch is stable
        return complex(np.exp(-np.log(t) / self.sites))

    @property
    def connectivity_vector(self) -> np.ndarray:
        return expand_pattern(self.pattern, self.sites, self.connectivity)

    def replace(self, **changes) -> "GraphSpec":
        return dataclasses.replace(self, **changes)


def assemble_hamiltonian(spec: GraphSpec, allow_invalid: bool = False) -> np.ndarray:
    """Dense N x N gauged hopping matrix for `spec`.

    Entry (i, j) with distance d = |j - i|:

        j > i :  a_d * t_fwd * exp(-1j * d * theta * k)
        j < i :  a_d * t_bwd * exp(+1j * d * theta * k)

    with zero diagonal.  The gauge sign is fixed so that gauge index k
    promotes the decay mode of winding k.  Connectivity vectors that break
    the pure-decay symmetry are rejected unless `allow_invalid` is set
    (exploration override).
    """
    conn = spec.connectivity_vector
    report = validate_pure_decay(conn)
    if not report.valid and not allow_invalid:
        raise ConfigurationError(
            "connectivity breaks the pure-decay symmetry a_d = a_(N-d) at distances "
            f"{report.violations}; pass allow_invalid=True to assemble anyway"
        )
    n = spec.sites
    idx = np.arange(n)
    d = idx[None, :] - idx[:, None]  # j - i, signed
    active = np.concatenate(([0], conn))[np.abs(d)]  # a_0 = 0 keeps the diagonal empty
    amplitude = np.where(d > 0, spec.t_fwd, spec.t_bwd)
    phase = np.exp(-1j * spec.phase_step * spec.gauge * d)
    return active * amplitude * phase


def gauge_diagonal(sites: int, gauge: int) -> np.ndarray:
    """Unitary diagonal D with D_mm = exp(+1j*(m-1)*theta*k).

    Satisfies assemble(spec with k) = D @ assemble(spec with 0) @ D^-1.
    """
    if not 0 <= gauge < sites:
        raise ConfigurationError(f"gauge index must lie in [0, {sites - 1}], got {gauge}")
    theta = 2.0 * np.pi / sites
    return np.diag(np.exp(1j * theta * gauge * np.arange(sites)))
