#!/usr/bin/env python3
"""Print the Gallopolis nerve, then each one-dimension projection with its winners."""
from polity import knit, nerve, states_containing
from polity.cli import io
from polity.cli.fixtures import gallopolis_site, gallopolis_weights
from polity.cli.scenarios import project_site, winning_viable
from polity.combinatorics import max_masks


def describe(title, site, weights):
    print(f"== {title}")
    for m in sorted(max_masks(nerve(site).masks), key=lambda m: (-m.bit_count(), m)):
        members = site.base.labels_of(m)
        common = states_containing(site, members).labels
        print(f"  facet {{{', '.join(members)}}} at {', '.join(common)}")
    winners = winning_viable(site, weights)
    if winners:
        for s in winners:
            print(f"  winning {s} with {weights.of(s)} of {weights.total} (quota {weights.quota})")
    else:
        print("  no viable coalition reaches the quota")


def main():
    site = io.load_site(gallopolis_site())
    weights = io.load_weights(gallopolis_weights(), site.base)
    missing = nerve(site).masks - knit(site).masks
    print(f"nerve has {len(nerve(site))} simplices; missing from the knit: "
          f"{[site.base.labels_of(m) for m in sorted(missing)]}")
    describe("full ground", site, weights)
    for dim in site.ground.dim_names:
        describe(f"drop {dim}", project_site(site, dim), weights)


if __name__ == "__main__":
    main()
