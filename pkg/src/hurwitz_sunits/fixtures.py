"""Presentations tabulated for small S, each generator given by an integral quaternion.

Relators use ``x^n`` for powers, ``( ... )^n`` for repeated blocks and
``(x, y)`` for the commutator ``x^-1 y^-1 x y``.  Exponents may also be
written with braces (``b^{-2}``); both spellings parse the same way.
"""

FIXTURES = {
    "s3_5": {
        "primes": (3, 5),
        "generators": [
            ("a", "-1 + I - J - 3 I J"),
            ("b", "-9 - 7 I - J + 7 I J"),
        ],
        "relators": [
            "(b^-1 a^-1 b a^-1)^3",
            "(b^-1 a^-2 b a^-1 b^-1 a^-1)^2",
            "(a^-1 b^-1 a^-1 b^-1 a^-1 b a^-1)^2",
            "b^-1 a b a b^-1 a^-1 b^2 a b^-1 a b a^2 b^-1 a b a b^-1 a^2 b a^2 b^-1 a^-1 b a^-2 b^-1 a^-2",
            "(b a^2 b^-1 a b a^-1 b)^2",
            "b^-1 a^3 b a^2 b^-1 a b^-1 a^-2 b a^-1 b^-1 a",
            "b^-2 a^-1 b a^-1 b^-1 a b a^2 b^-2 a^-2 b a^-1",
            "a b^-1 a^2 b a^-1 b^-1 a^-2 b a^-2 b^-1 a b a",
        ],
    },
    "s3_7": {
        "primes": (3, 7),
        "generators": [
            ("a", "-1 + I - J - 3 I J"),
            ("b", "-1 - I - J - 5 I J"),
        ],
        "relators": [
            "b a b a^-2 b a b^-1 a^-1 b^-1 a^2 b^-1 a^-1",
            "a^3 b a^-2 b a b a^2 b^-1 a^-1 b^-3 a^-1 b^-1",
            "b a b^-1 a^-1 b^-1 a^-1 b a b^2 a b^2 a^-2 b a b",
            "(a^2 b^-1 a^-1 b^-2 a^-1 b^-1 a)^2",
            "a b^3 a b^3 a b a^-2 b a^3 b a^-2 b",
            "b^-2 a b^2 a b a^-2 b^3 a b a^-2 b^2 a^2 b^-1 a^-1 b^-2 a^-1 b^-2 a^-1",
        ],
    },
    "s3_11": {
        "primes": (3, 11),
        "generators": [
            ("a", "1 + I - J - I J"),
            ("b", "-1 - I - J - 3 I J"),
            ("c", "-1 + I - 3 I J"),
        ],
        "relators": [
            "a^3",
            "(b^-1 c a^-1)^2",
            "(b, a^-1)^2",
            "(c^-1 b a^-1 b)^2",
            "b a^-1 b^-2 a c^-1 a b^-1 c^-1",
            "c^-1 a b^-1 c^-1 a c b^-1 a^-1 c^-1",
            "(b^2 a^-1 b^-1 a^-1)^2",
            "(b a b^-1 a^-1 c^-1)^2",
        ],
    },
    "s5_7": {
        "primes": (5, 7),
        "generators": [
            ("a", "1 - I + J - I J"),
            ("b", "-J - 2 I J"),
            ("c", "-1 + I + J - 5 I J"),
        ],
        "relators": [
            "b^2",
            "a^3",
            "(c^-1 a b)^2",
            "(a, c^-1)^2",
            "(b c a^-1 c^-1 a)^2",
            "(c a^-1 c^-1 a^-1)^3",
            "c a c^-1 a b c a c^-1 a^-1 c^-1 a^-1 b a c a",
            "c^-1 a^-1 b a c^2 a c^-1 a^-1 b a c a c^-1 a",
        ],
    },
    "s3_5_7": {
        "primes": (3, 5, 7),
        "generators": [
            ("a", "1 + I - J - I J"),
            ("b", "-1 - I - J - 3 I J"),
            ("c", "-I - 2 I J"),
            ("d", "-1 - I - J - 5 I J"),
        ],
        "relators": [
            "c^2",
            "a^3",
            "b^-1 d a d^-1 b a^-1",
            "b d c d^-1 b^-1 c",
            "c a^-1 d^-1 c a d",
            "(d^-1, a)^2",
            "(d b a^-1 d)^2",
            "(c a^-1 b^2)^2",
            "(d a b a^-1)^2",
            "b^-1 d c a d^-1 b^-1 a c a^-1",
            "c a^-1 b^-1 a^-1 c d a^-1 d^-1 b^-1 a",
            "b a d a d^-1 a b^2 a b^-1 a",
            "d^-1 b^-1 a^-1 b d^-1 b^2 a d a d^-1",
            "(a^-1 d a^-1 d^-1)^3",
            "d^2 a d^-1 a b d^-1 a^-1 d a^-1 d^-1 b^-1",
            "d^-1 a^-1 b^-1 a c b^-1 a d^-1 a c a^-1 d a^-1 d^-1",
            "c d a^-1 d^-1 a^-1 d^-1 a^-1 b^-1 a c b^-1 d^-1 a d a d^-1",
            "(d a^-1 d a^-1 d^-1 a^-1 c a^-1)^2",
        ],
    },
    "s3_5_11": {
        "primes": (3, 5, 11),
        "generators": [
            ("a", "-1 - I - J - 3 I J"),
            ("b", "-1 - 2 I J"),
            ("c", "-1 + J - 3 I J"),
        ],
        "relators": [
            "b^2 c b a^-1 c^-2 b^-1 a c^-1",
            "(b^-1 c^-1 b^-1 a c^-1 a^-1)^2",
            "b c b a b a^-1 b^-1 c^-1 b^-1 a c^-1 b^-1 c a^-1",
            "b a c^-1 b^-1 a c^-1 a^2 b^-1 c^-1 b^-1 a c^-1 a",
            "b^-2 a^-1 b^-1 c^-1 b^-1 c^-1 b^-1 a c^-1 a b a^-1 b^-1 c^-1 b^-1",
            "b a c^-1 b^-1 a c^-1 a b^-1 c a^-1 c a^-1 b c a^-1 c^-1",
            "c a^-1 b c b^-1 a^-1 b^-1 c b^-1 c^-1 b^-1 a c^-1 a b c",
            "c b^2 a c^-1 b^-1 a c^-1 a c a^-1 b c b a^-1 c a^-1 b",
            "a^-1 c^-1 a^-1 c a^-1 b c b^-1 a c^-1 b a b^-1 c^-1 b^-2 a c",
            "c^2 a^-1 b c b a^-2 c^-2 b^-1 a^2 b^-1 c^-1 b^-1 a b",
            "c^-1 a^-1 b^2 c b a^-1 b^-1 a^-1 b^-1 a b^2 a c^-1 b^-1 a c^-1",
            "b c a c^-1 b^-1 a c^-1 a c^-2 b^-1 a^-1 c a^-1 b c a^-1 c",
            "(b^2 c a^-1 b c b^2 a)^2",
            "a^-2 c a^-2 c a^-1 b c a^-1 c a^-2 b a b c^-1 b^-1 a c^-1",
            "b a b^2 a c^-1 b^-2 a b^-1 a^-1 b^-2 a^-3 b^-1 c^-1 b^-1 a",
            "a c b c b a^-1 c^-1 b^-1 c^-1 b^-1 a c^-1 b c b a b^-1 a^-1 b^-2 a^-1 b^-1",
            "b a b^2 a b a c^-1 a b a b c^-1 b^-1 a c^-1 b a^-1 b c b a",
            "b^2 c a^-1 b c a^-1 c b a^-1 c^-1 a^-1 c a^-1 b c b a^-1 b a^-1 b a",
            "b^-2 c^-1 b^-1 a c^-1 a b^-1 a b^-1 a^-1 b^-2 a^-1 b c b^-1 a^-1 c a^-1 b^-1 a",
            "(b a c^-1 a^-1 c a^-1 b c b^2 a)^2",
            "(c^-1 a^-2 c a^-1 b c b c^-1 b^-1 a c^-1 a^-1)^2",
            "a^-1 b c b a c^-1 b^-1 a c^-1 a^3 c a^-1 b c b^-1 a^-1 b^-1 c a^-1 b c a^-1 b^-1 c b^-2 c^-1 b^-1 a c^-1 b^-2 a^-1 c b c",
        ],
    },
}
