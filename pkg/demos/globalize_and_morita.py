"""From a partial action to its envelope, smash products, and Morita data.

Run with:  python3 demos/globalize_and_morita.py
"""

from partialhopf import (
    PreconditionViolated,
    as_partial,
    build_morita,
    is_bilateral,
    is_minimal,
    is_total,
    morita_dims,
    standard_enveloping,
    verify_morita,
    verify_partial_action,
)
from partialhopf.catalog import corner_projection_kZ2, kZ2_swap, trivial_partial_kZ2


def walk(name, d):
    print(f"== {name} ==")
    print("partial action verifies:", verify_partial_action(d).ok)
    print("total:", is_total(d), " bilateral:", is_bilateral(d))

    env = standard_enveloping(d)
    B = env.glob.algebra
    print("standard envelope: dim", B.dim, " minimal:", is_minimal(env))
    print("ambient smash product B # H has dimension", B.dim * env.glob.hopf.dim)

    try:
        ctx = build_morita(env)
    except PreconditionViolated as exc:
        print("Morita context refused:", exc)
        print()
        return
    print("Morita context verifies:", verify_morita(ctx).ok)
    dims = morita_dims(ctx)
    print("dims:", dims)
    if dims["MN"] == dims["carrier"] and dims["NM"] == dims["smash"]:
        print("both trace ideals are everything, so the context is strict")
    else:
        print("a trace ideal is proper, so the context is not strict")
    print()


def main():
    print("Partial actions of the group algebra of Z/2, smallest first.\n")
    walk("trivial partial action on the base field", trivial_partial_kZ2())
    walk("swap action on k x k, already total", as_partial(kZ2_swap()))
    walk("corner projection on k x k x k", corner_projection_kZ2())


if __name__ == "__main__":
    main()
