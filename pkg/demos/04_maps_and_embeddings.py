"""Factorization pairs as bipartite maps: genus, embeddings, characters.

The running example is the pair sigma1 = (1,5,4,2)(3), sigma2 = (2,3,5)(1,4)
whose product is the 5-cycle; it draws as a map on the torus.  Embedding
counts into a Young diagram, summed with signs over all factorizations,
recover the normalized character.
"""

from stanleychar import (
    Partition,
    Permutation,
    build_map,
    count_embeddings,
    enumerate_factorizations,
    normalized_character,
    signed_embedding_sum,
)

sigma1 = Permutation.from_cycles([(1, 5, 4, 2), (3,)], 5)
sigma2 = Permutation.from_cycles([(2, 3, 5), (1, 4)], 5)
m = build_map(sigma1, sigma2)
print(f"white vertices {sigma1}, black vertices {sigma2}, faces {sigma1 * sigma2}")
print(f"euler characteristic {m.euler_characteristic()}, genus {m.genus_per_component()}")
print(f"embeddings into (3,1): {count_embeddings(m, Partition((3, 1)))}")
print()
print(m.to_dot())
print()

lam = Partition((2, 1))
for parts in [(1,), (2,), (3,)]:
    pi = Partition(parts)
    print(
        f"signed embedding sum for pi={pi} into {lam}: "
        f"{signed_embedding_sum(pi, lam)} "
        f"(character: {normalized_character(pi, lam)})"
    )

# for a k-cycle, genus-0 maps are exactly the minimal factorizations
k = 4
full = Permutation.from_cycles([tuple(range(1, k + 1))], k)
planar = sum(
    1
    for s1, s2 in enumerate_factorizations(full)
    if build_map(s1, s2).genus_per_component() == [0]
)
minimal = sum(
    1
    for s1, s2 in enumerate_factorizations(full)
    if s1.num_cycles() + s2.num_cycles() == k + 1
)
print(f"k={k}: {planar} planar maps, {minimal} minimal factorizations")
