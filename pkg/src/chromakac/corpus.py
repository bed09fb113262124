"""The fixed graph corpus used by the acceptance suite.

Generator specs use the CLI's ``--gen`` syntax so any entry can be replayed
from the command line.
"""

from .graph import disjoint_union, generate_graph

RANDOM_PS = (0.3, 0.5, 0.8)


def random_specs(count=20):
    specs = []
    for i in range(count):
        n = 5 + i % 3
        p = RANDOM_PS[(i // 3) % 3]
        specs.append(f"random:{n}:p={p}:seed={1000 + i}")
    return specs


def corpus_specs():
    specs = [f"path:{n}" for n in range(1, 8)]
    specs += [f"cycle:{n}" for n in range(3, 8)]
    specs += [f"complete:{n}" for n in range(2, 7)]
    specs += [f"star:{n}" for n in range(2, 7)]
    specs += random_specs()
    return specs


def parse_spec(spec: str):
    """``family:n[:p=<p>][:seed=<s>]`` -> (family, n, seed, p)."""
    parts = spec.split(":")
    if len(parts) < 2:
        raise ValueError(f"graph spec {spec!r} must look like family:n[:p=..][:seed=..]")
    family = parts[0]
    try:
        n = int(parts[1])
    except ValueError:
        raise ValueError(f"graph spec {spec!r}: size {parts[1]!r} is not an integer") from None
    seed = p = None
    for opt in parts[2:]:
        key, _, val = opt.partition("=")
        try:
            if key == "p":
                p = float(val)
            elif key == "seed":
                seed = int(val)
            else:
                raise ValueError(f"graph spec {spec!r}: unknown option {key!r}")
        except ValueError as exc:
            if "unknown option" in str(exc):
                raise
            raise ValueError(f"graph spec {spec!r}: bad value {val!r} for {key}") from None
    return family, n, seed, p


def graph_from_spec(spec: str):
    family, n, seed, p = parse_spec(spec)
    return generate_graph(family, n, seed=seed, p=p)


def disconnected_example():
    """K2 + K3, the disconnected corpus member."""
    return disjoint_union(generate_graph("complete", 2), generate_graph("complete", 3))


def corpus():
    """[(label, Graph), ...] for every acceptance corpus graph."""
    out = [(s, graph_from_spec(s)) for s in corpus_specs()]
    out.append(("K2+K3", disconnected_example()))
    return out
