import json
import os
import re
from fractions import Fraction
from typing import List, Optional, Union

from sympy import isprime, primerange

from .exceptions import ImproperlyConfigured, NotPrimeError, ValidationError

PRIME_LIMIT = 2 ** 31


def validate_config_path(path):
    if not os.path.exists(path):
        raise ImproperlyConfigured(
            f'No such configuration file: {path}'
        )

    if not os.path.isfile(path):
        raise ImproperlyConfigured(
            f'Config should be a file: {path}'
        )

    if not os.access(path, os.R_OK):
        raise ImproperlyConfigured(
            f'Cannot read the config file. Please grant read privileges: {path}'
        )


def load_config(path) -> dict:
    validate_config_path(path)

    with open(path, encoding="utf-8") as fh:
        try:
            config = json.load(fh)
        except json.JSONDecodeError as e:
            raise ImproperlyConfigured(f"Config is not valid JSON: {path}: {e}")

    if not isinstance(config, dict):
        raise ImproperlyConfigured(f"Config should hold a JSON object: {path}")

    return config


def check_prime(p: int) -> int:
    """Returns p when it is a prime below 2^31, raises NotPrimeError otherwise."""
    if isinstance(p, bool) or not isinstance(p, int):
        raise NotPrimeError(f"Characteristic must be an integer, got {p!r}")
    if p < 2 or p >= PRIME_LIMIT or not isprime(p):
        raise NotPrimeError(f"{p} is not a prime below 2^31")
    return p


def parse_rational(text: Union[str, int, Fraction]) -> Fraction:
    """
    Parses "num/den" or an integer literal into an exact Fraction.

    Decimals are rejected: thresholds and coefficients are always exact.
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)

    match = re.fullmatch(r"\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?", str(text))
    if match is None:
        raise ValidationError(f"Expected a rational 'num/den', got {text!r}")

    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ValidationError(f"Zero denominator in {text!r}")
    return Fraction(numerator, denominator)


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_primes(text: str, residue: Optional[str] = None) -> List[int]:
    """
    Parses a prime list "2,3,5" or an inclusive range "2..199", optionally
    filtered by a residue condition "1mod3".
    """
    text = text.strip()
    range_match = re.fullmatch(r"(\d+)\s*\.\.\s*(\d+)", text)

    if range_match:
        low, high = int(range_match.group(1)), int(range_match.group(2))
        if high < low:
            raise ValidationError(f"--primes: empty range {text!r}")
        if high >= PRIME_LIMIT:
            raise ValidationError(f"--primes: range exceeds 2^31: {text!r}")
        primes = list(primerange(low, high + 1))
    else:
        try:
            primes = [int(part) for part in text.split(",") if part.strip()]
        except ValueError:
            raise ValidationError(f"--primes: expected 'A..B' or a comma list, got {text!r}")
        for p in primes:
            if p < 2 or p >= PRIME_LIMIT or not isprime(p):
                raise ValidationError(f"--primes: {p} is not a prime below 2^31")

    if residue is not None:
        residue_match = re.fullmatch(r"\s*(\d+)\s*mod\s*(\d+)\s*", residue)
        if residue_match is None or int(residue_match.group(2)) == 0:
            raise ValidationError(f"--residue: expected 'r mod m', got {residue!r}")
        r, m = int(residue_match.group(1)), int(residue_match.group(2))
        primes = [p for p in primes if p % m == r % m]

    if not primes:
        raise ValidationError(f"--primes: no primes selected by {text!r}")

    return sorted(set(primes))
