# Counting partitions that are simultaneously s-, (s+d)- and (s+2d)-cores,
# and comparing with T(s+d-1, s)/d. Every agreement is an instance that is
# consistent with the conjecture, nothing more.
# Run: python demos/04_simultaneous_cores.py

from motzkin_ct.cores import (
    Partition,
    conjecture_check,
    coprime_pairs,
    count_simultaneous_cores_by_size,
    from_beta_set,
    hook_lengths,
    iter_simultaneous_core_betas,
    to_beta_set,
)

p = Partition((4, 2, 1))
print(p, "hooks", sorted(hook_lengths(p), reverse=True), "beta-set", sorted(to_beta_set(p)))

# All (3, 4, 5)-cores, i.e. s=3, d=1
for beta in iter_simultaneous_core_betas((3, 4, 5), window=5):
    print("  ", from_beta_set(beta), "beta", sorted(beta))

print("\nby size, (s,d)=(5,2):", dict(sorted(count_simultaneous_cores_by_size(5, 2).items())))

for s, d in coprime_pairs(13):
    r = conjecture_check(s, d)
    verdict = "consistent" if r.equal else "INCONSISTENT"
    print(f"s={s:>2} d={d}: {r.values} {verdict}")
