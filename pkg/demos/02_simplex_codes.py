"""Simplex and MacDonald codes over R_q: generators, weight distributions, structure."""

from rqcodes.analysis import weight_distribution
from rqcodes.constructions import (
    binary_simplex_alpha,
    macdonald_alpha_generator,
    simplex_alpha_generator,
    simplex_beta_generator,
)
from rqcodes.linalg import (
    concatenation_multiplicity,
    enumerate_code,
    format_matrix,
    gray_image_matrix,
    project_matrix,
    torsion_code,
)

# %% Type alpha: every k-tuple over R_q appears once as a column.
G = simplex_alpha_generator(1, 2)
print(format_matrix(G))
C = enumerate_code(G)
print(f"|C| = {C.size}, 2-dimension = {C.two_dim}")

# %% Every nonzero codeword has the same Lee weight.
for metric in ("hamming", "lee", "hom"):
    print(f"{metric:8s}", weight_distribution(C, metric).as_json())

# %% The Lee image of the generator is a stack of binary simplex codes ...
img = gray_image_matrix(G, "lee")
print("Lee image:", img.shape, "=", concatenation_multiplicity(img, binary_simplex_alpha(2)), "copies of G_2")

# %% ... the projection R_2 -> R_1 collapses S^alpha(2,1) onto copies of S^alpha(1,1) ...
P = project_matrix(simplex_alpha_generator(2, 1))
print("projection:", concatenation_multiplicity(P, simplex_alpha_generator(1, 1)), "copies")

# %% ... and the torsion code Tor_theta is a binary simplex code repeated.
T = torsion_code(C, (1,))
print(f"torsion code: length {T.n}, dimension {T.rank}, min distance {T.min_distance()}")

# %% Type beta and MacDonald codes are shorter relatives.
print("S^beta(1,3) width:", simplex_beta_generator(1, 3).cols)
M = macdonald_alpha_generator(1, 3, 1)
print("M^alpha(1,3,1) length:", M.cols, "Lee distribution:", weight_distribution(enumerate_code(M), "lee").as_json())
