"""Self-contained xorshift64* generator.

Seeded searches and simulations must reproduce bit for bit on every platform
and Python version, so nothing from ``random`` is used anywhere in the
package.  The generator is the classic xorshift64* (shifts 12, 25, 27,
multiplier 0x2545F4914F6CDD1D).  A zero seed would lock the xorshift state at
zero, so it is replaced by the 64-bit golden ratio constant.
"""

_M64 = (1 << 64) - 1
_MULT = 0x2545F4914F6CDD1D
_ZERO_SEED = 0x9E3779B97F4A7C15


class XorShift64Star:
    def __init__(self, seed: int):
        self.state = seed & _M64
        if self.state == 0:
            self.state = _ZERO_SEED

    def next64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & _M64
        x ^= x >> 27
        self.state = x
        return (x * _MULT) & _M64

    def below(self, n: int) -> int:
        """Draw from 0..n-1 by reducing the next 64-bit word modulo n."""
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        return self.next64() % n
