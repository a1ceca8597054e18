"""Physical constants and the shipped Ba-137 atomic-constants file.

The hyperfine/Zeeman constants of the ion are inputs, not outputs, of this
package: they come from the spectroscopy literature and live in a small
key=value data file so they can be swapped without touching code.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .kvfile import KVError, coerce, parse_kv_text

# CODATA 2018
HBAR = 1.054571817e-34  # J s
AMU = 1.66053906660e-27  # kg
MU_B_MHZ_PER_G = 1.39962449  # Bohr magneton / h, in MHz per gauss

REQUIRED_KEYS = {
    "s12.A_hf_mhz": float,
    "d52.A_hf_mhz": float,
    "d52.B_quad_mhz": float,
    "s12.gJ": float,
    "d52.gJ": float,
    "gI": float,
    "ion.mass_amu": float,
}


@dataclass(frozen=True)
class AtomicConstants:
    """Hyperfine constants and g-factors for the S1/2 and D5/2 manifolds."""

    s12_A_hf_mhz: float
    d52_A_hf_mhz: float
    d52_B_quad_mhz: float
    s12_gJ: float
    d52_gJ: float
    gI: float  # nuclear g-factor in Bohr-magneton units, H_Z = mu_B*B*(gJ*Jz + gI*Iz)
    mass_amu: float

    @property
    def mass_kg(self) -> float:
        return self.mass_amu * AMU


def parse_constants_text(text: str, path: str = "<string>") -> AtomicConstants:
    entries = parse_kv_text(text, path)
    unknown = set(entries) - set(REQUIRED_KEYS)
    if unknown:
        key = sorted(unknown)[0]
        raise KVError(f"unknown key {key!r}", path, entries[key][1])
    missing = set(REQUIRED_KEYS) - set(entries)
    if missing:
        raise KVError(f"missing keys: {', '.join(sorted(missing))}", path)
    vals = {
        key: coerce(key, raw, typ, path, line)
        for key, typ in REQUIRED_KEYS.items()
        for raw, line in [entries[key]]
    }
    return AtomicConstants(
        s12_A_hf_mhz=vals["s12.A_hf_mhz"],
        d52_A_hf_mhz=vals["d52.A_hf_mhz"],
        d52_B_quad_mhz=vals["d52.B_quad_mhz"],
        s12_gJ=vals["s12.gJ"],
        d52_gJ=vals["d52.gJ"],
        gI=vals["gI"],
        mass_amu=vals["ion.mass_amu"],
    )


def load_constants(path: str | None = None) -> AtomicConstants:
    """Load atomic constants from a file, or the shipped Ba-137 set if None."""
    if path is None or path == "builtin":
        text = (
            resources.files("dualgate.data").joinpath("ba137_constants.txt").read_text()
        )
        return parse_constants_text(text, "ba137_constants.txt")
    with open(path, "r") as fh:
        return parse_constants_text(fh.read(), path)
