"""Seedable lazy Markov chain over the dimer coverings of a graph.

Each step draws one site uniformly from the static list of unit
squares and t-sites.  A site supports exactly one move in each state
(or none), and that move is its own inverse on the site, so the
proposal kernel is symmetric and the stationary distribution is
uniform on the chain's connected component.  Proposing from the fixed
geometric site list, rather than from the moves applicable to the
current state, is what keeps the kernel symmetric: applicable-move
counts differ between neighboring states.

The random source is Python's Mersenne-Twister generator; the report
records the algorithm tag so runs remain auditable if the stdlib ever
changes.
"""

import random
from dataclasses import dataclass, field

from .covering import DimerCovering, validate_covering
from .lattice import InvalidInputError
from .moves import t_sites, unit_squares

RNG_ALGORITHM = "python-random-mersenne-twister"


@dataclass(frozen=True)
class ChainConfig:
    seed: int
    steps: int
    burn_in: int = 0
    sample_every: int = 1

    def __post_init__(self):
        if self.steps < 0 or self.burn_in < 0:
            raise InvalidInputError("steps and burn_in must be nonnegative")
        if self.sample_every < 1:
            raise InvalidInputError("sample_every must be at least 1")


@dataclass
class SampleReport:
    config: ChainConfig
    final: DimerCovering
    accepted: int
    n_samples: int
    impurity_counts: dict            # diagonal Edge -> occupation count
    state_counts: dict = field(default_factory=dict)
    trajectory: list = field(default_factory=list)
    rng_algorithm: str = RNG_ALGORITHM

    @property
    def acceptance_rate(self):
        return self.accepted / self.config.steps if self.config.steps else 0.0

    def impurity_frequencies(self):
        if self.n_samples == 0:
            return {}
        return {e: c / self.n_samples
                for e, c in self.impurity_counts.items()}


def proposal_sites(g):
    """The state-independent proposal list: s-sites then t-sites."""
    sites = [("s",) + sq for sq in unit_squares(g)]
    sites += [("t",) + site for site in t_sites(g)]
    return tuple(sites)


def _toggle(mate, site):
    # Apply the site's move to the mate map in place; False = hold.
    if site[0] == "s":
        _, bl, br, tr, tl = site
        if mate[bl] == br and mate[tl] == tr:
            mate[bl], mate[tl], mate[br], mate[tr] = tl, bl, tr, br
            return True
        if mate[bl] == tl and mate[br] == tr:
            mate[bl], mate[br], mate[tl], mate[tr] = br, bl, tr, tl
            return True
        return False
    _, a, b, c, d = site
    if mate[a] == b and mate[c] == d:
        mate[b], mate[c], mate[a], mate[d] = c, b, d, a
        return True
    if mate[b] == c and mate[a] == d:
        mate[a], mate[b], mate[c], mate[d] = b, a, d, c
        return True
    return False


def step(m: DimerCovering, rng: random.Random) -> DimerCovering:
    """One lazy chain step from m; returns m itself on a hold."""
    sites = proposal_sites(m.graph)
    mate = dict(m.mate_map())
    if _toggle(mate, sites[rng.randrange(len(sites))]):
        dimers = {tuple(sorted((v, w))) for v, w in mate.items()}
        return validate_covering(m.graph, dimers)
    return m


def run(m0: DimerCovering, cfg: ChainConfig, track_states=False,
        keep_trajectory=False) -> SampleReport:
    """Run the chain from m0, thinning samples after burn-in."""
    g = m0.graph
    sites = proposal_sites(g)
    n_sites = len(sites)
    mate = dict(m0.mate_map())
    whites1 = [w for w in g.whites if w[0] % 2]  # impurity = W1-white pair
    rng = random.Random(cfg.seed)
    randrange = rng.randrange
    accepted = 0
    n_samples = 0
    impurity_counts = {}
    state_counts = {}
    trajectory = []
    for i in range(cfg.steps):
        if _toggle(mate, sites[randrange(n_sites)]):
            accepted += 1
        if i >= cfg.burn_in and (i - cfg.burn_in) % cfg.sample_every == 0:
            n_samples += 1
            for w in whites1:
                v = mate[w]
                if (v[0] + v[1]) % 2 == 0:
                    e = (w, v) if w <= v else (v, w)
                    impurity_counts[e] = impurity_counts.get(e, 0) + 1
            if track_states or keep_trajectory:
                key = tuple(sorted(tuple(sorted((v, w)))
                                   for v, w in mate.items() if v < w))
                if track_states:
                    state_counts[key] = state_counts.get(key, 0) + 1
                if keep_trajectory:
                    trajectory.append(key)
    dimers = {tuple(sorted((v, w))) for v, w in mate.items()}
    final = validate_covering(g, dimers)
    return SampleReport(cfg, final, accepted, n_samples,
                        impurity_counts, state_counts, trajectory)
