# %%
# Which regular languages are the factor sets of an almost periodic word?
from apwords import (build_factor_automaton, build_periodic_factor_automaton, compile_regex,
                     enumerate_shortlex, is_almost_periodic, is_closed)

# %%
# (ab)* is not closed under taking factors: "a" is a factor but not a member
ab_star = compile_regex("(ab)*", "ab")
print(is_closed(ab_star).to_dict())

# its factor closure is a regular language too
sub = build_factor_automaton(ab_star)
print(enumerate_shortlex(sub, 4))

# %%
# the closure is the factor set of the periodic word abab..., hence almost periodic
d = is_almost_periodic(sub)
print(d.verdict, d.witness, d.notes)

# %%
# a*b* is closed, but long words like aaaaaaaa avoid "b", so redundancy fails
d = is_almost_periodic(compile_regex("a*b*", "ab"))
print(d.verdict, "counterexample:", d.counterexample)

# %%
# every periodic factor language is recognized, with the root up to rotation
for w in ["ab", "ba", "abab", "bba"]:
    d = is_almost_periodic(build_periodic_factor_automaton(w, "ab"))
    print(w, d.verdict, d.witness)
