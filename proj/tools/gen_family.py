#!/usr/bin/env python3
"""Writes a Family-style KB: a few intertwined family trees, about 200
individuals and 2,000 assertions. Deterministic for a given seed."""

import argparse
import random

TBOX = """\
hasSon SubRoleOf hasChild
hasDaughter SubRoleOf hasChild
hasBrother SubRoleOf hasSibling
hasSister SubRoleOf hasSibling
Male SubClassOf Person
Female SubClassOf Person
Person and hasChild some Person SubClassOf Parent
Male and Parent SubClassOf Father
Female and Parent SubClassOf Mother
hasChild some Parent SubClassOf Grandparent
Male and Grandparent SubClassOf Grandfather
Female and Grandparent SubClassOf Grandmother
Male and hasSibling some Person SubClassOf Brother
Female and hasSibling some Person SubClassOf Sister
Male and hasParent some Person SubClassOf Son
Female and hasParent some Person SubClassOf Daughter
Male and hasSibling some Parent SubClassOf Uncle
Female and hasSibling some Parent SubClassOf Aunt
Person and married some Person SubClassOf Spouse
hasChild some (Female and hasChild some Thing) SubClassOf GrandparentViaDaughter
"""


def generate(seed: int, target: int) -> list[str]:
    rng = random.Random(seed)
    people: list[tuple[str, str]] = []  # (name, sex)
    lines: list[str] = []

    def person(sex: str) -> str:
        name = f"p{len(people):03d}"
        people.append((name, sex))
        lines.append(f"{sex}({name})")
        return name

    generation = []
    for _ in range(12):
        f, m = person("Male"), person("Female")
        lines.append(f"married({f}, {m})")
        lines.append(f"married({m}, {f})")
        generation.append((f, m))

    while len(people) < target:
        next_gen = []
        singles = {"Male": [], "Female": []}
        for f, m in generation:
            kids = [person(rng.choice(["Male", "Female"])) for _ in range(rng.randint(2, 5))]
            for k in kids:
                sex = dict(people)[k]
                rel = "hasSon" if sex == "Male" else "hasDaughter"
                for p in (f, m):
                    lines.append(f"{rel}({p}, {k})")
                    lines.append(f"hasParent({k}, {p})")
                for s in kids:
                    if s != k:
                        rel = "hasBrother" if dict(people)[s] == "Male" else "hasSister"
                        lines.append(f"{rel}({k}, {s})")
                singles[sex].append(k)
            if len(people) >= target:
                break
        rng.shuffle(singles["Male"])
        rng.shuffle(singles["Female"])
        for f, m in zip(singles["Male"], singles["Female"]):
            lines.append(f"married({f}, {m})")
            lines.append(f"married({m}, {f})")
            next_gen.append((f, m))
        if not next_gen:
            break
        generation = next_gen

    # Plain type assertions, as in the published family benchmarks.
    for name, _ in people:
        lines.append(f"Person({name})")
    return lines


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=2024)
    ap.add_argument("--individuals", type=int, default=202)
    ap.add_argument("--out", default="-")
    args = ap.parse_args()
    text = "# Generated by tools/gen_family.py\n" + TBOX + "\n".join(generate(args.seed, args.individuals)) + "\n"
    if args.out == "-":
        print(text, end="")
    else:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(text)


if __name__ == "__main__":
    main()
