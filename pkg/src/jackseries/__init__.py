"""Jack-polynomial hypergeometric series, spherical functions and branching scans."""

from .combinatorics import enumerate_partitions, gen_pochhammer, hook_products, pi_m, q_param
from .domains import DomainDescriptor, make_domain, wallach_set
from .hypergeo import SeriesParams, SeriesResult, convergent_at_one, hyper_at_one, hyper_eval
from .jack import dim_component, jack_J, jack_norm_one, omega_eval

__all__ = [
    "DomainDescriptor", "SeriesParams", "SeriesResult", "convergent_at_one", "dim_component",
    "enumerate_partitions", "gen_pochhammer", "hook_products", "hyper_at_one", "hyper_eval",
    "jack_J", "jack_norm_one", "make_domain", "omega_eval", "pi_m", "q_param", "wallach_set",
]
