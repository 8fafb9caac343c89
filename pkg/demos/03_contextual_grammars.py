# %%
# Internal contextual grammars and the letter-star probe
from apwords import ContextualGrammar, Mode, generate, letter_star_probe

# Dyck-like words: start from ab, insert a...b around any factor
dyck = ContextualGrammar("ab", ["ab"], [("a", "b")], Mode.INTERNAL)
print(dyck.family, generate(dyck, 6).words)

# %%
# not closed under factors (λ is missing), so the probe is consistent
r = letter_star_probe(dyck, max_len=12, k=4)
print(r.closed_up_to_k, r.redundant_up_to_k, r.consistency)

# %%
# a* passes all three observations and is itself a letter-star language
unary = ContextualGrammar("a", [""], [("a", "")], Mode.EXTERNAL)
r = letter_star_probe(unary, max_len=12, k=4)
print(r.closed_up_to_k, r.redundant_up_to_k, r.letter_star, r.letter, r.consistency)
print(r.warnings)
