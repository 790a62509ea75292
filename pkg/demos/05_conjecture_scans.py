"""Range scans for the open cases: conjectured triples, an even-square
variant, and a two-sided equivalence bridge.

None of this proves anything; the value is in the exact bookkeeping:
empty exceptional sets at scale for the conjectured triples, the precise
four exceptions of the even-square variant, and a per-n agreement check
between two representability questions claimed equivalent.
"""

from terna import diagonal_bridge, scan_5x2_5y2_4z2, verify_conjectured_triples

LIMIT = 50_000

print(f"== six conjectured universal triples, scanned to {LIMIT} ==")
for triple, report in verify_conjectured_triples(LIMIT):
    status = "no exceptions" if report.is_empty() else f"exceptions {report.exceptions[:5]}"
    print(f"x({triple[0]}x+1)+y({triple[1]}y+1)+z({triple[2]}z+1): {status}")

print()
print("== 20n+r = 5x^2 + 5y^2 + (2z)^2: the even-z counterpart ==")
scan = scan_5x2_5y2_4z2(10_000)
for r, exceptions in sorted(scan.exceptions.items()):
    print(f"r = {r}: fails exactly at n in {list(exceptions)}")

print()
print("== equivalence bridge: (2,3,7) sums vs 21x^2+14y^2+6z^2 at 168n+41 ==")
bridge = diagonal_bridge(20_000)
print(f"n up to {bridge.limit}: {len(bridge.mismatches)} mismatches; "
      f"polynomial side misses {list(bridge.poly_exceptions) or 'nothing'}; "
      f"diagonal side misses {list(bridge.diagonal_failures) or 'nothing'}")
