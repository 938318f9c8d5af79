"""The identity registry end to end: run everything, inspect diagnostics,
export a sequence.  The CLI exposes the same operations as
``sptlab verify``, ``sptlab seq`` and ``sptlab coeff``.
"""

from sptlab import export_sequence, registry, run_all

ORDER, BOUND = 30, 20

print(f"== running all registered checks (order={ORDER}, oracle bound={BOUND}) ==")
results = run_all(ORDER, BOUND)
for meta, result in zip(registry(), results):
    print(f"{result.id:>4} {result.status:5} ({result.runtime_ms:7.1f} ms)  {meta.description}")
    if result.diagnostic and "name" in result.diagnostic:
        d = result.diagnostic
        where = d.get("first_mismatch")
        print(f"      diagnostic [{d['name']}]: {d['status']} as expected, "
              f"first difference {where}")

print()
passed = sum(r.status == "pass" for r in results)
print(f"{passed}/{len(results)} checks passed")

print()
print("== exporting the restricted smallest-parts sequence ==")
print(export_sequence("spt23", 12, "csv").strip())
