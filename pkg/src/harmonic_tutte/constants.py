APP_NAME = "harmonic-tutte"
APP_VERSION = "0.1.0"
ENV_PREFIX = "HTUTTE_"

# Enumeration caps
DEFAULT_MAX_N = 20  # 2^n subsets for Tutte sums
DEFAULT_MAX_WORDS = 2**24  # q^k codewords

# Seeded corpus
DEFAULT_SEED = 0
DEFAULT_CORPUS_SIZE = 200
DEFAULT_LEMMA_TRIPLES = 1000
DEFAULT_GREENE_POINTS = 50
DEFAULT_ORACLE_MATROIDS = 50

# Per-identity instance profiles: field sizes, largest n, largest degree
CORPUS_PROFILES = {
    "duality": {"qs": (2, 3), "max_n": 10, "max_d": 3},
    "greene": {"qs": (2,), "max_n": 10, "max_d": 3},
    "greene-fq": {"qs": (3, 5), "max_n": 8, "max_d": 3},
    "macwilliams": {"qs": (2,), "max_n": 10, "max_d": 3},
    "macwilliams-fq": {"qs": (3, 5), "max_n": 8, "max_d": 2},
    "btf": {"qs": (2, 3), "max_n": 10, "max_d": 3},
    "reinterpretation": {"qs": (2, 3), "max_n": 10, "max_d": 3},
}

# Fixed-width console so human output is byte-stable
HUMAN_CONSOLE_WIDTH = 100
