"""
Semirings from tables
=====================

A finite semiring can be given by its addition and multiplication tables.
Validation checks every axiom on every triple and keeps one witness per
broken law.
"""

from wfasim import TableSemiring, gf2, validate_table_semiring, zmod

xor_and = TableSemiring.from_labels('01', [['0', '1'], ['1', '0']], [['0', '0'], ['0', '1']], '0', '1')
rep = validate_table_semiring(xor_and)
print('xor/and:', 'pass' if rep else 'fail', rep.checked, 'triples; field:', xor_and.is_field,
      '; same as GF(2):', xor_and == gf2())

for n in (4, 5):
    t = zmod(n)
    print(f'Z/{n}: ring {t.is_ring}, field {t.is_field}')

# multiplication that forgets its unit
broken = TableSemiring.from_labels('01', [['0', '1'], ['1', '1']], [['0', '0'], ['0', '0']], '0', '1')
for v in validate_table_semiring(broken).violations:
    print('violation:', v)
