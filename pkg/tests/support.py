"""Seeded random record generators shared by the test modules."""

from recplug.records import Benchmark, Device

# Headroom so the demo arithmetic (+100, +200, pairwise and three-way sums)
# cannot leave the 64-bit signed range.
SAFE_INT = 2**61


def random_device(rng, lo=-SAFE_INT, hi=SAFE_INT) -> Device:
    return Device(rng.random() < 0.5, rng.randint(lo, hi), rng.randint(lo, hi))


def random_text(rng, max_bytes=64) -> str:
    """Random unicode whose UTF-8 encoding fits in max_bytes."""
    budget = rng.randint(0, max_bytes)
    out = []
    size = 0
    while size < budget:
        cp = rng.randrange(0x110000)
        if 0xD800 <= cp <= 0xDFFF:  # surrogates are not encodable
            continue
        ch = chr(cp)
        n = len(ch.encode("utf-8"))
        if size + n > budget:
            break
        out.append(ch)
        size += n
    return "".join(out)


def random_benchmark(rng, app_lo=-(10**6), app_hi=10**6) -> Benchmark:
    return Benchmark(
        rng.randint(app_lo, app_hi),
        random_text(rng),
        rng.randint(app_lo, app_hi),
        random_text(rng),
    )
