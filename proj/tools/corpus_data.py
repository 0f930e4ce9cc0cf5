"""Transcribed reference data for the golden corpus.

Every matrix is typed out row by row as printed in the worked examples; the
generator never derives these from the library under test.
"""

# 18 x 18 Gram matrix; the leading n x n block is the Picard lattice of the n-th double plane.
SEXTIC_GRAM = """
 -2   3   0   1   1   1   1   1   1   1   1   1   1   1   1   1   1   1
  3  -2   1   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0
  0   1  -2   1   0   0   0   0   0   0   0   0   0   0   0   0   0   0
  1   0   1  -2   1   0   0   0   0   0   0   0   0   0   0   0   0   0
  1   0   0   1  -2   1   0   0   0   0   0   0   0   0   0   0   0   0
  1   0   0   0   1  -2   1   0   0   0   0   0   0   0   0   0   0   0
  1   0   0   0   0   1  -2   1   0   0   0   0   0   0   0   0   0   0
  1   0   0   0   0   0   1  -2   0   0   0   0   0   0   0   0   0   0
  1   0   0   0   0   0   0   0  -2   0   0   1   0   0   0   0   0   0
  1   0   0   0   0   0   0   0   0  -2   1   0   0   0   0   0   0   0
  1   0   0   0   0   0   0   0   0   1  -2   1   0   0   0   0   0   0
  1   0   0   0   0   0   0   0   1   0   1  -2   1   0   0   0   0   0
  1   0   0   0   0   0   0   0   0   0   0   1  -2   1   0   0   0   0
  1   0   0   0   0   0   0   0   0   0   0   0   1  -2   1   0   0   0
  1   0   0   0   0   0   0   0   0   0   0   0   0   1  -2   1   0   0
  1   0   0   0   0   0   0   0   0   0   0   0   0   0   1  -2   0   0
  1   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0  -2   0
  1   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0  -2
"""

# Root lattice E8 in the labelled basis lambda1..lambda8.
E8_GRAM = """
 -2   0   0   1   0   0   0   0
  0  -2   1   0   0   0   0   0
  0   1  -2   1   0   0   0   0
  1   0   1  -2   1   0   0   0
  0   0   0   1  -2   1   0   0
  0   0   0   0   1  -2   1   0
  0   0   0   0   0   1  -2   1
  0   0   0   0   0   0   1  -2
"""

QUADRIC_GRAM = """
  0   1   1   1
  1  -2   2   0
  1   2  -2   0
  1   0   0  -2
"""

QUADRIC_ACTION = """
  1   0   0   0
  0   0   1   1
  0   1   0   1
  0   0   0  -1
"""

F2_GRAM = """
 -2   0   1   0   1
  0  -2   0   1   0
  1   0  -2   2   0
  0   1   2  -2   0
  1   0   0   0  -2
"""

F2_ACTION = """
  0   1   0   0   0
  1   0   0   0   0
  0   0   0   1   1
  0   0   1   0   1
  0   0   0   0  -1
"""

# Images of the Picard basis in the K3 lattice, written with the basis labels
# lambda1..8, lambda1'..8', mu1, mu2, mu1', mu2', mu1'', mu2''.
SEXTIC_IMAGES = [
    "lambda1 + mu1", "lambda2 + 3 mu2", "lambda3", "lambda4",
    "lambda5 + mu2", "lambda6 + mu2", "lambda7 + mu2", "lambda8 + mu2",
    "lambda1' + mu2", "lambda2' + mu2", "lambda3' + mu2", "lambda4' + mu2",
    "lambda5' + mu2", "lambda6' + mu2", "lambda7' + mu2", "lambda8' + mu2",
    "mu2 + mu1' - mu2'", "mu2 + mu1'' - mu2''",
]
QUADRIC_IMAGES = ["mu1 + mu1'", "lambda1 + mu2 + mu1''", "lambda4 + mu2 + mu2''", "lambda2 + mu2"]
F2_IMAGES = ["lambda4", "lambda2 + mu1", "lambda1 + 2 mu1", "lambda7 + mu2", "lambda5"]

# Labels that complete each image to a basis of the K3 lattice.
SEXTIC3_COMPLETION = ["lambda4", "lambda5", "lambda6", "lambda7", "lambda8",
                      "lambda1'", "lambda2'", "lambda3'", "lambda4'", "lambda5'", "lambda6'", "lambda7'", "lambda8'",
                      "mu1", "mu2", "mu1'", "mu2'", "mu1''", "mu2''"]
SEXTIC18_COMPLETION = ["mu1", "mu2", "mu1'", "mu1''"]
QUADRIC_COMPLETION = ["lambda1", "lambda2", "lambda3", "lambda4", "lambda5", "lambda6", "lambda7", "lambda8",
                      "lambda1'", "lambda2'", "lambda3'", "lambda4'", "lambda5'", "lambda6'", "lambda7'", "lambda8'",
                      "mu1", "mu2'"]
F2_COMPLETION = ["lambda3", "lambda6", "lambda7", "lambda8",
                 "lambda1'", "lambda2'", "lambda3'", "lambda4'", "lambda5'", "lambda6'", "lambda7'", "lambda8'",
                 "mu1", "mu1'", "mu2'", "mu1''", "mu2''"]

# 22 x 22 extension of the involution to the K3 lattice.
SEXTIC18_PHI = """
 -3  -2   1   1   0   0   0   0   0   0   0   0   0   0   0   0   3   1   0   0   0   0
 -2  -3   1   1   0   0   0   0   0   0   0   0   0   0   0   0   3   1   0   0   0   0
  0   0  -1   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0
  0   0   0  -1   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0
  0   0   0   0  -1   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0
  0   0   0   0   0  -1   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0
  0   0   0   0   0   0  -1   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0
  0   0   0   0   0   0   0  -1   0   0   0   0   0   0   0   0   0   0   0   0   0   0
  0   0   0   0   0   0   0   0  -1   0   0   0   0   0   0   0   0   0   0   0   0   0
  0   0   0   0   0   0   0   0   0  -1   0   0   0   0   0   0   0   0   0   0   0   0
  0   0   0   0   0   0   0   0   0   0  -1   0   0   0   0   0   0   0   0   0   0   0
  0   0   0   0   0   0   0   0   0   0   0  -1   0   0   0   0   0   0   0   0   0   0
  0   0   0   0   0   0   0   0   0   0   0   0  -1   0   0   0   0   0   0   0   0   0
  0   0   0   0   0   0   0   0   0   0   0   0   0  -1   0   0   0   0   0   0   0   0
  0   0   0   0   0   0   0   0   0   0   0   0   0   0  -1   0   0   0   0   0   0   0
  0   0   0   0   0   0   0   0   0   0   0   0   0   0   0  -1   0   0   0   0   0   0
 -2  -2   1   1   0   0   0   0   0   0   0   0   0   0   0   0   2   1   0   0   0   0
 -6  -6   3   3   0   0   0   0   0   0   0   0   0   0   0   0   9   2   0   0   0   0
  0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0  -1   0   0   0
  0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0  -1   0   0
  0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0  -1   0
  0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0  -1
"""

# 22 x 22 extension of the involution to the K3 lattice.
QUADRIC_PHI = """
 -1   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   1   0   1   0   0
  0  -1   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0
  0   0  -1   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0
  0   0   0  -1   0   0   0   0   0   0   0   0   0   0   0   0   0   1   0   1   0   0
  0   0   0   0  -1   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0
  0   0   0   0   0  -1   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0
  0   0   0   0   0   0  -1   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0
  0   0   0   0   0   0   0  -1   0   0   0   0   0   0   0   0   0   0   0   0   0   0
  0   0   0   0   0   0   0   0  -1   0   0   0   0   0   0   0   0   0   0   0   0   0
  0   0   0   0   0   0   0   0   0  -1   0   0   0   0   0   0   0   0   0   0   0   0
  0   0   0   0   0   0   0   0   0   0  -1   0   0   0   0   0   0   0   0   0   0   0
  0   0   0   0   0   0   0   0   0   0   0  -1   0   0   0   0   0   0   0   0   0   0
  0   0   0   0   0   0   0   0   0   0   0   0  -1   0   0   0   0   0   0   0   0   0
  0   0   0   0   0   0   0   0   0   0   0   0   0  -1   0   0   0   0   0   0   0   0
  0   0   0   0   0   0   0   0   0   0   0   0   0   0  -1   0   0   0   0   0   0   0
  0   0   0   0   0   0   0   0   0   0   0   0   0   0   0  -1   0   0   0   0   0   0
 -1   0   1  -1   1   0   0   0   0   0   0   0   0   0   0   0   1   0   0   0   1   1
  0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   1   0   2   0   0
 -1   0   1  -1   1   0   0   0   0   0   0   0   0   0   0   0   2   0  -1   0   1   1
  0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0  -1   0   0
  0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   1   0   1  -1   0
  0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   1   0   1   0  -1
"""

# 22 x 22 extension of the involution to the K3 lattice.
F2_PHI = """
 -4  -2   2   0   1   2  -4   2   0   0   0   0   0   0   0   0   2   5   0   0   0   0
 -2  -1   0   1   0   1  -2   1   0   0   0   0   0   0   0   0   1   2   0   0   0   0
  0   0  -1   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0
 -2   0   0   0   0   1  -2   1   0   0   0   0   0   0   0   0   1   2   0   0   0   0
  0   0   0   0  -1   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0
  0   0   0   0   0  -1   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0
 -3  -2   2   0   1   2  -5   2   0   0   0   0   0   0   0   0   2   5   0   0   0   0
  0   0   0   0   0   0   0  -1   0   0   0   0   0   0   0   0   0   0   0   0   0   0
  0   0   0   0   0   0   0   0  -1   0   0   0   0   0   0   0   0   0   0   0   0   0
  0   0   0   0   0   0   0   0   0  -1   0   0   0   0   0   0   0   0   0   0   0   0
  0   0   0   0   0   0   0   0   0   0  -1   0   0   0   0   0   0   0   0   0   0   0
  0   0   0   0   0   0   0   0   0   0   0  -1   0   0   0   0   0   0   0   0   0   0
  0   0   0   0   0   0   0   0   0   0   0   0  -1   0   0   0   0   0   0   0   0   0
  0   0   0   0   0   0   0   0   0   0   0   0   0  -1   0   0   0   0   0   0   0   0
  0   0   0   0   0   0   0   0   0   0   0   0   0   0  -1   0   0   0   0   0   0   0
  0   0   0   0   0   0   0   0   0   0   0   0   0   0   0  -1   0   0   0   0   0   0
 -8  -4   4   1   2   5 -10   5   0   0   0   0   0   0   0   0   4  12   0   0   0   0
 -3  -2   2   0   1   2  -4   2   0   0   0   0   0   0   0   0   2   4   0   0   0   0
  0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0  -1   0   0   0
  0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0  -1   0   0
  0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0  -1   0
  0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0   0  -1
"""
