"""Symbol sequences for Hankel- and Cesaro-type operators.

A symbol is a sequence lambda_0, lambda_1, ... given as one of

* ``explicit``     -- a finite coefficient list (zero beyond the list),
* ``powerlog``     -- lambda_n = scale * (n+1)^(-alpha) * log(n+2)^(-beta),
* ``moments``      -- lambda_n = n-th moment of a measure on [0, 1),
* ``lacunary``     -- supported on a geometrically separated integer set,
  either a finite explicit list or generated from a closed-form rule
  v_k = scale * n_k^(-decay) * (k+1)^(-power),
* ``randomized``   -- i.i.d. multipliers X_n times conj(lambda_n) of a base
  symbol, reproducible from a (seed, stream) pair.

Besides point values every symbol knows how to bracket its weighted tails
sum_{n > N} w(n) |lambda_n|^2 (w(n) = n or n+1): exactly zero for finite
symbols, by integral comparison for powerlog, by closed-form geometric sums
for atomic moment symbols and ruled lacunary symbols, and "not certified"
otherwise.  Divergence is flagged analytically where the closed form decides
it.  These brackets are what the classification layer consumes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MONOTONE_DECREASING = "decreasing-positive"
MONOTONE_GENERAL = "general"
MONOTONE_UNKNOWN = "unknown"

#: relative padding applied to bracket ends to absorb float summation error
_SUM_PAD = 64.0 * np.finfo(np.float64).eps


@dataclass(frozen=True)
class TailBracket:
    """Bracket for a weighted tail sum beyond a truncation index."""

    lower: float
    upper: float  # inf when the remainder is not certified
    divergent: bool = False

    @property
    def certified(self) -> bool:
        return np.isfinite(self.upper)


def _weight_values(weight: str, n: np.ndarray) -> np.ndarray:
    if weight == "widom":
        return n.astype(np.float64)
    if weight == "membership":
        return (n + 1).astype(np.float64)
    raise ValueError(f"unknown tail weight {weight!r}")


class SymbolSeq:
    """A symbol sequence; construct via the ``explicit``/``powerlog``/...

    classmethods.  Instances are immutable by convention (internal caches
    only grow) and safe to share across threads.
    """

    def __init__(self, kind, params, monotone_flag, is_real):
        self.kind = kind
        self.params = params
        self.monotone_flag = monotone_flag
        self.is_real = is_real

    # -- constructors -------------------------------------------------------

    @classmethod
    def explicit(cls, values) -> "SymbolSeq":
        arr = np.atleast_1d(np.asarray(values))
        if np.iscomplexobj(arr) and np.any(arr.imag != 0.0):
            arr = arr.astype(np.complex128)
            real = False
        else:
            arr = arr.real.astype(np.float64)
            real = True
        if real and arr.size and np.all(arr >= 0.0) and np.all(np.diff(arr) <= 0.0):
            flag = MONOTONE_DECREASING
        else:
            flag = MONOTONE_GENERAL
        return cls("explicit", {"values": arr}, flag, real)

    @classmethod
    def powerlog(cls, alpha: float, beta: float, scale: float = 1.0) -> "SymbolSeq":
        if scale <= 0.0:
            raise ValueError("powerlog scale must be positive")
        flag = MONOTONE_DECREASING if (alpha >= 0.0 and beta >= 0.0) else MONOTONE_GENERAL
        return cls(
            "powerlog",
            {"alpha": float(alpha), "beta": float(beta), "scale": float(scale)},
            flag,
            True,
        )

    @classmethod
    def from_measure(cls, measure) -> "SymbolSeq":
        """Moment sequence mu_n of a finite positive measure on [0, 1)."""
        return cls("moments", {"measure": measure, "cache": None}, MONOTONE_DECREASING, True)

    @classmethod
    def lacunary(cls, support, values, ratio: float | None = None) -> "SymbolSeq":
        support = np.asarray(support, dtype=np.int64)
        vals = np.atleast_1d(np.asarray(values))
        if support.ndim != 1 or support.shape != vals.shape:
            raise ValueError("support and values must be 1-D of equal length")
        if support.size and support[0] < 1:
            raise ValueError("lacunary support must consist of integers >= 1")
        if np.any(np.diff(support) <= 0):
            raise ValueError("lacunary support must be strictly increasing")
        q = _lacunary_ratio(support) if ratio is None else float(ratio)
        if support.size >= 2 and q <= 1.0:
            raise ValueError("lacunary support must have ratio q > 1")
        if np.iscomplexobj(vals) and np.any(vals.imag != 0.0):
            vals = vals.astype(np.complex128)
            real = False
        else:
            vals = vals.real.astype(np.float64)
            real = True
        params = {"support": support, "values": vals, "q": q, "rule": None}
        return cls("lacunary", params, MONOTONE_GENERAL, real)

    @classmethod
    def lacunary_rule(
        cls,
        start: int,
        ratio: float,
        decay: float,
        power: float = 0.0,
        scale: float = 1.0,
    ) -> "SymbolSeq":
        """Infinite lacunary symbol n_0 = start, n_{k+1} = ceil(ratio * n_k),
        with values v_k = scale * n_k^(-decay) * (k+1)^(-power)."""
        if start < 1:
            raise ValueError("lacunary support must start at an integer >= 1")
        if ratio <= 1.0:
            raise ValueError("lacunary ratio must satisfy q > 1")
        if power < 0.0:
            raise ValueError("rule power must be >= 0")
        if scale <= 0.0:
            raise ValueError("rule scale must be positive")
        rule = {"decay": float(decay), "power": float(power), "scale": float(scale)}
        params = {
            "support": np.array([start], dtype=np.int64),
            "values": np.array([_rule_value(rule, start, 0)], dtype=np.float64),
            "q": float(ratio),
            "rule": rule,
        }
        return cls("lacunary", params, MONOTONE_GENERAL, True)

    @classmethod
    def randomized(cls, base: "SymbolSeq", dist, seed: int, stream: int = 0) -> "SymbolSeq":
        """Multiplier symbol X_n * conj(lambda_n); dist must expose
        sample(seed, stream, indices)."""
        params = {"base": base, "dist": dist, "seed": int(seed), "stream": int(stream)}
        return cls("randomized", params, MONOTONE_GENERAL, base.is_real)

    # -- values -------------------------------------------------------------

    def values(self, indices) -> np.ndarray:
        """Symbol values at the given indices (vectorized)."""
        idx = np.atleast_1d(np.asarray(indices, dtype=np.int64))
        if np.any(idx < 0):
            raise ValueError("symbol indices must be >= 0")
        if self.kind == "explicit":
            vals = self.params["values"]
            out = np.zeros(idx.shape, dtype=vals.dtype)
            inside = idx < vals.shape[0]
            out[inside] = vals[idx[inside]]
            return out
        if self.kind == "powerlog":
            p = self.params
            n = idx.astype(np.float64)
            return p["scale"] * (n + 1.0) ** (-p["alpha"]) * np.log(n + 2.0) ** (-p["beta"])
        if self.kind == "moments":
            return self._moment_values(idx)
        if self.kind == "lacunary":
            self._extend_support(int(idx.max()) if idx.size else 0)
            support = self.params["support"]
            vals = self.params["values"]
            if support.size == 0:
                return np.zeros(idx.shape, dtype=np.float64)
            pos = np.searchsorted(support, idx)
            out = np.zeros(idx.shape, dtype=vals.dtype)
            hit = (pos < support.shape[0]) & (support[np.minimum(pos, support.shape[0] - 1)] == idx)
            out[hit] = vals[pos[hit]]
            return out
        if self.kind == "randomized":
            p = self.params
            base_vals = np.conj(p["base"].values(idx))
            x = p["dist"].sample(p["seed"], p["stream"], idx)
            return x * base_vals
        raise AssertionError(f"unhandled kind {self.kind}")

    def value(self, n: int) -> complex:
        return complex(self.values(np.array([n]))[0])

    # -- structure ----------------------------------------------------------

    @property
    def finite_support_bound(self) -> int | None:
        """Largest index that can be nonzero, or None for infinite symbols."""
        if self.kind == "explicit":
            return self.params["values"].shape[0] - 1
        if self.kind == "lacunary" and self.params["rule"] is None:
            s = self.params["support"]
            return int(s[-1]) if s.size else 0
        if self.kind == "randomized":
            return self.params["base"].finite_support_bound
        return None

    def describe(self) -> dict:
        d = {"kind": self.kind, "monotone": self.monotone_flag}
        if self.kind == "explicit":
            v = self.params["values"]
            d["values"] = [complex(x) for x in v] if not self.is_real else [float(x) for x in v]
        elif self.kind == "powerlog":
            d.update({k: self.params[k] for k in ("alpha", "beta", "scale")})
        elif self.kind == "moments":
            d["measure"] = self.params["measure"].describe()
        elif self.kind == "lacunary":
            d["q"] = self.params["q"]
            if self.params["rule"] is not None:
                d["rule"] = dict(self.params["rule"])
                d["start"] = int(self.params["support"][0])
            else:
                d["support"] = [int(x) for x in self.params["support"]]
                d["values"] = [float(x) for x in self.params["values"]]
        elif self.kind == "randomized":
            d["base"] = self.params["base"].describe()
            d["seed"] = self.params["seed"]
            d["stream"] = self.params["stream"]
            dist = self.params["dist"]
            d["dist"] = getattr(dist, "name", str(dist))
            d["normalized"] = bool(getattr(dist, "normalized", True))
        return d

    # -- tail brackets ------------------------------------------------------

    def tail_remainder(self, nmax: int, weight: str = "widom") -> TailBracket:
        """Bracket for sum_{n > nmax} w(n) |lambda_n|^2.

        weight = 'widom' uses w(n) = n, 'membership' uses w(n) = n + 1.
        """
        if weight not in ("widom", "membership"):
            raise ValueError(f"unknown tail weight {weight!r}")
        bound = self.finite_support_bound
        if bound is not None:
            if bound <= nmax:
                return TailBracket(0.0, 0.0)
            # finite symbol with support past nmax: sum the leftover exactly
            n = np.arange(nmax + 1, bound + 1)
            vals = self.values(n)
            rest = float(np.sum(_weight_values(weight, n) * np.abs(vals) ** 2))
            pad = _SUM_PAD * rest
            return TailBracket(max(rest - pad, 0.0), rest + pad)
        if self.kind == "powerlog":
            return _powerlog_tail(self.params, nmax, weight)
        if self.kind == "moments":
            return _moments_tail(self.params["measure"], nmax, weight)
        if self.kind == "lacunary":
            return self._lacunary_rule_tail(nmax, weight)
        # randomized and other kinds: not certified
        return TailBracket(0.0, np.inf)

    # -- internals ----------------------------------------------------------

    def _moment_values(self, idx: np.ndarray) -> np.ndarray:
        cache = self.params["cache"]
        top = int(idx.max()) if idx.size else 0
        if cache is None or cache.shape[0] <= top:
            grow = max(top + 1, 2 * (cache.shape[0] if cache is not None else 64))
            cache = self.params["measure"].moments(np.arange(grow))
            self.params["cache"] = cache
        return cache[idx]

    def _extend_support(self, through: int) -> None:
        rule = self.params["rule"]
        if rule is None:
            return
        support = self.params["support"]
        vals = self.params["values"]
        q = self.params["q"]
        new_s = []
        new_v = []
        n_last = int(support[-1])
        k = support.shape[0] - 1
        while n_last <= through:
            n_last = max(n_last + 1, int(np.ceil(n_last * q)))
            k += 1
            new_s.append(n_last)
            new_v.append(_rule_value(rule, n_last, k))
        if new_s:
            self.params["support"] = np.concatenate([support, np.array(new_s, dtype=np.int64)])
            self.params["values"] = np.concatenate([vals, np.array(new_v)])

    def _lacunary_rule_tail(self, nmax: int, weight: str) -> TailBracket:
        rule = self.params["rule"]
        if rule is None:  # finite symbol, handled by finite_support_bound path
            return TailBracket(0.0, 0.0)
        rho, p, scale = rule["decay"], rule["power"], rule["scale"]
        q = self.params["q"]
        if rho < 0.5 or (rho == 0.5 and p <= 0.5):
            return TailBracket(0.0, np.inf, divergent=True)
        self._extend_support(nmax)
        support = self.params["support"]
        k0 = int(np.searchsorted(support, nmax, side="right"))
        while k0 >= support.shape[0]:  # materialize the first tail point
            self._extend_support(int(self.params["support"][-1]) + 1)
            support = self.params["support"]
        m0 = float(support[k0])
        if rho > 0.5:
            # w(n_k) <= 2 n_k, n_k >= m0 q^(k-k0), (k+1)^(-2p) <= (k0+1)^(-2p)
            r = q ** (1.0 - 2.0 * rho)
            upper = 2.0 * scale**2 * (k0 + 1.0) ** (-2.0 * p) * m0 ** (1.0 - 2.0 * rho) / (1.0 - r)
        else:
            # rho == 0.5, p > 0.5: terms <= scale^2 (1 + 1/m0) (k+1)^(-2p)
            kk = max(k0, 1)
            tail_k = kk ** (1.0 - 2.0 * p) / (2.0 * p - 1.0)
            head = (k0 + 1.0) ** (-2.0 * p) if k0 == 0 else 0.0
            upper = scale**2 * (1.0 + 1.0 / m0) * (tail_k + head)
        return TailBracket(0.0, float(upper))


def _lacunary_ratio(support: np.ndarray) -> float:
    if support.size < 2:
        return np.inf
    return float(np.min(support[1:] / support[:-1]))


def _rule_value(rule: dict, n_k: int, k: int) -> float:
    return rule["scale"] * float(n_k) ** (-rule["decay"]) * (k + 1.0) ** (-rule["power"])


def _powerlog_tail(params: dict, nmax: int, weight: str) -> TailBracket:
    """Integral-comparison bracket for sum_{n>N} w(n) lambda_n^2,
    lambda_n = scale (n+1)^(-alpha) log(n+2)^(-beta)."""
    a, b, scale = params["alpha"], params["beta"], params["scale"]
    s2 = scale * scale
    n = float(nmax)
    if a < 1.0 or (a == 1.0 and b <= 0.5):
        return TailBracket(0.0, np.inf, divergent=True)
    if b < 0.0:
        # growing log factor: certification not implemented
        return TailBracket(0.0, np.inf)
    if a == 1.0:
        # terms w(n) (n+1)^(-2) L^(-2b) with L = log(n+2); 2b > 1 here
        c = 2.0 * b - 1.0
        upper = s2 * (n + 3.0) / (n + 2.0) * np.log(n + 2.0) ** (-c) / c
        if weight == "widom":
            lower = s2 * (1.0 - (n + 2.0) ** (-2.0)) * np.log(n + 3.0) ** (-c) / c
        else:
            lower = s2 * np.log(n + 3.0) ** (-c) / c
        return TailBracket(float(lower), float(upper))
    # a > 1, b >= 0: w(n) lambda_n^2 <= (n+1)^(1-2a) log(N+3)^(-2b)
    upper = s2 * np.log(n + 3.0) ** (-2.0 * b) * (n + 1.0) ** (2.0 - 2.0 * a) / (2.0 * a - 2.0)
    return TailBracket(0.0, float(upper))


def _moments_tail(measure, nmax: int, weight: str) -> TailBracket:
    """Tail bracket for a moment symbol.

    Atom-only measures (support supremum < 1) admit an exact closed form via
    sum_{n>N} w(n) x^n over products of atom locations; measures with a
    density component reach up to t = 1 and are not certified.
    """
    if measure.has_density or measure.support_sup >= 1.0:
        if measure.total_mass == 0.0:
            return TailBracket(0.0, 0.0)
        return TailBracket(0.0, np.inf)
    atoms = measure.atoms
    if not atoms:
        return TailBracket(0.0, 0.0)
    total = 0.0
    for loc_j, mass_j in atoms:
        for loc_i, mass_i in atoms:
            x = loc_j * loc_i
            total += mass_j * mass_i * _geom_tail(x, nmax, weight)
    pad = _SUM_PAD * total
    return TailBracket(max(total - pad, 0.0), total + pad)


def _geom_tail(x: float, nmax: int, weight: str) -> float:
    """sum_{n>N} n x^n (widom) or sum_{n>N} (n+1) x^n (membership), 0<=x<1."""
    if x == 0.0:
        return 0.0
    one = 1.0 - x
    if weight == "widom":
        return x ** (nmax + 1) * ((nmax + 1) - nmax * x) / (one * one)
    return x ** (nmax + 1) * ((nmax + 2) - (nmax + 1) * x) / (one * one)


def from_dict(d: dict) -> SymbolSeq:
    """Build a symbol from its configuration dictionary (CLI schema)."""
    kind = d.get("kind")
    if kind == "explicit":
        vals = d["values"]
        vals = [complex(v["re"], v.get("im", 0.0)) if isinstance(v, dict) else v for v in vals]
        return SymbolSeq.explicit(vals)
    if kind == "powerlog":
        return SymbolSeq.powerlog(d["alpha"], d["beta"], d.get("scale", 1.0))
    if kind == "moments":
        from . import measures

        return SymbolSeq.from_measure(measures.MeasureSpec.from_dict(d["measure"]))
    if kind == "lacunary":
        if "rule" in d:
            r = d["rule"]
            return SymbolSeq.lacunary_rule(
                d.get("start", 1), d.get("q", 2.0), r["decay"], r.get("power", 0.0), r.get("scale", 1.0)
            )
        return SymbolSeq.lacunary(d["support"], d["values"], d.get("q"))
    if kind == "randomized":
        from . import stochastic

        base = from_dict(d["base"])
        dist = stochastic.DistTag(d.get("dist", "rademacher"), d.get("normalized", True))
        return SymbolSeq.randomized(base, dist, d["seed"], d.get("stream", 0))
    raise ValueError(f"unknown symbol kind {kind!r}")
