"""Hereditarily finite sets: parsing, Ackermann codes, transitive sets."""

from forcinglab.hf import (
    ackermann_code,
    enumerate_transitive_sets,
    format_hf,
    is_transitive,
    ordinal,
    parse_hf,
    rank,
    size,
)

# duplicates merge and children are sorted by code, so equal sets print the same
for text in ["{}", "{{},{}}", "{{{}},{}}", "{{{}}}"]:
    x = parse_hf(text)
    print(f"{text:12} -> {format_hf(x):12} code={ackermann_code(x):<4} rank={rank(x)} "
          f"size={size(x)} transitive={is_transitive(x)}")

print()
print("ordinal 3 =", format_hf(ordinal(3)))

# every transitive set of rank <= 3 whose closure has at most 5 elements
print()
for x in enumerate_transitive_sets(3, 5):
    print(f"  code {ackermann_code(x):>5}  {format_hf(x)}")
