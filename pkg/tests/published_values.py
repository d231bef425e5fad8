"""Published performance table: n, makespans (exact, heuristic, SDR), printed errors."""

TABLE4 = [
    (2, 24.975, 24.975, 26.265, 0.0, 5.16),
    (3, 82.948, 82.9485, 93.334, 0.0, 12.52),
    (4, 16.780, 16.864, 21.159, 0.50, 26.09),
    (5, 81.458, 81.458, 105.765, 0.0, 29.84),
    (6, 185.756, 185.756, 249.031, 0.0, 34.06),
    (7, 3836.419, 3836.419, 4361.866, 0.0, 13.69),
    (8, 1020.844, 1020.844, 1435.403, 0.0, 40.60),
    (9, 2162.115, 2162.115, 2691.113, 0.0, 24.46),
    (10, 4277.653, 4323.567, 5219.636, 1.70, 22.02),
]

MEAN_ERR_HEURISTIC = 0.24
MEAN_ERR_SDR = 23.16
ENUM_COUNT_N10 = 3_628_800
