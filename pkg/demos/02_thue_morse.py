# %%
# Thue-Morse: uniformly recurrent, yet its factors match no periodic word
from apwords import (eventual_periodicity_probe, factors_of_length, prefix,
                     recurrence_table, thue_morse)

tm = thue_morse()
print(prefix(tm, 64))

# %%
# factor complexity for small n
for n in range(1, 7):
    print(n, len(factors_of_length(tm, n, 4096)))

# %%
# recurrence: every window of length R(n) contains all factors of length n
for row in recurrence_table(tm, range(1, 7), 4096):
    print(row.n, row.value)

# %%
# no short period word explains the length-12 factors
d = eventual_periodicity_probe(tm, max_period=4, n=12, prefix_len=4096)
print(d.verdict, d.status)
for w, missing in list(d.details.items())[:5]:
    print(f"  period {w!r}: observed factor {missing!r} never occurs in {w}^omega")
print(f"  ... {len(d.details)} candidate periods, all refuted")
