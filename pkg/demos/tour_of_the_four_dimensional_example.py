"""A walking tour of the four-dimensional Hopf algebra and its partial action.

Run with:  python3 demos/tour_of_the_four_dimensional_example.py
"""

from partialhopf import (
    QQ,
    is_minimal,
    is_total,
    morphism_to_standard,
    standard_enveloping,
    verify_enveloping,
    verify_hopf,
    verify_module_algebra,
    verify_partial_action,
)
from partialhopf.catalog import h4_adjoint, h4_partial_example, sweedler_h4


def show_tensor(names, t, label):
    print(f"\n{label}:")
    for i, plane in enumerate(t):
        for j, row in enumerate(plane):
            terms = [f"{c}*{names[k]}" for k, c in enumerate(row) if c]
            if terms:
                print(f"  {names[i]} . {names[j]} = {' + '.join(terms)}")


def main():
    idem, orig, C = sweedler_h4(QQ)
    print("Two presentations of the same four-dimensional Hopf algebra.")
    print("Original basis:", ", ".join(orig.basis_names))
    print("Idempotent basis:", ", ".join(idem.basis_names))
    print("Both verify:", verify_hopf(orig).ok, verify_hopf(idem).ok)
    show_tensor(idem.basis_names, idem.mult, "products in the idempotent basis")

    adj = h4_adjoint(QQ)
    print("\nThe adjoint action  h |> a = sum h1 a S(h2)  is a module algebra:",
          verify_module_algebra(adj).ok)

    bbar_action, partial, user_env = h4_partial_example(QQ)
    print("\nQuotient by the span of h2 gives a module algebra of dimension",
          bbar_action.algebra.dim)
    print("Restricting to the span of e1~ induces a partial action:")
    print("  axioms hold:", verify_partial_action(partial).ok)
    print("  total:", is_total(partial))

    std = standard_enveloping(partial)
    print("\nStandard envelope dimension:", std.glob.algebra.dim)
    print("Minimal:", is_minimal(std))

    print("\nA bigger envelope also works but is not minimal:")
    print("  verifies:", verify_enveloping(user_env).ok)
    print("  minimal:", is_minimal(user_env))
    phi, _ = morphism_to_standard(user_env)
    pretty = [[QQ.format(x) for x in row] for row in phi.data]
    print(f"  comparison morphism matrix: {pretty} (rank {phi.rank()})")


if __name__ == "__main__":
    main()
