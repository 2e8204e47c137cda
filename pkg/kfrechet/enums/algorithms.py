from enum import StrEnum


class Algorithm(StrEnum):
    BRUTE = "brute"
    FPT = "fpt"
    APPROX = "approx"
    WEAK = "weak"
    HAUSDORFF = "hausdorff"
    FRECHET = "frechet"


class MinimizeMethod(StrEnum):
    EXACT = "exact"
    APPROX = "approx"


class SearchMode(StrEnum):
    BISECTION = "bisection"
    CANDIDATES = "candidates"


class CurveFormat(StrEnum):
    TEXT = "text"
    JSON = "json"
