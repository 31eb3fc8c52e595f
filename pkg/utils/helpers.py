"""
Helper utilities for the Z4 two-chain poset code toolkit.
"""
from typing import Any, Dict, List, Mapping, Optional, Tuple


def format_analyzer_response(
    success: bool,
    data: Optional[Dict[str, Any]] = None,
    error: Optional[str] = None,
    error_type: Optional[str] = None
) -> Dict[str, Any]:
    """
    Format analyzer response in a standardized way.

    Args:
        success (bool): Whether the analyzer run was successful
        data (Optional[Dict[str, Any]]): Response data if successful
        error (Optional[str]): Error message if unsuccessful
        error_type (Optional[str]): Exception class name behind the error

    Returns:
        Dict[str, Any]: Formatted response
    """
    response = {
        "success": success,
        "data": data or {},
        "error": error,
        "error_type": error_type
    }
    return response


def merge_counts(counts1: Mapping[int, int], counts2: Mapping[int, int]) -> Dict[int, int]:
    """
    Merge two weight maps by summing the counts of shared keys.

    Args:
        counts1 (Mapping[int, int]): First weight map
        counts2 (Mapping[int, int]): Second weight map

    Returns:
        Dict[int, int]: Merged weight map
    """
    merged = dict(counts1)
    for key, value in counts2.items():
        merged[key] = merged.get(key, 0) + value
    return merged


def chunk_ranges(total: int, chunk_size: int) -> List[Tuple[int, int]]:
    """
    Split [0, total) into consecutive half-open ranges of at most chunk_size.

    Args:
        total (int): Size of the index space
        chunk_size (int): Maximum size of each range

    Returns:
        List[Tuple[int, int]]: List of (start, stop) pairs
    """
    chunk_size = max(1, chunk_size)
    return [(start, min(start + chunk_size, total)) for start in range(0, total, chunk_size)]


def partition_ranges(total: int, parts: int) -> List[Tuple[int, int]]:
    """
    Split [0, total) into at most `parts` contiguous ranges of near-equal size.

    Args:
        total (int): Size of the index space
        parts (int): Number of workers

    Returns:
        List[Tuple[int, int]]: Non-empty (start, stop) pairs in ascending order
    """
    parts = max(1, min(parts, total))
    base, extra = divmod(total, parts)
    ranges = []
    start = 0
    for part in range(parts):
        stop = start + base + (1 if part < extra else 0)
        ranges.append((start, stop))
        start = stop
    return ranges


def format_enumerator(counts: Mapping[int, int], variable: str = "z") -> str:
    """
    Render a weight map as a weight enumerator, e.g. "1+6z^4+z^8".

    Args:
        counts (Mapping[int, int]): Map weight -> number of codewords
        variable (str): Enumerator variable

    Returns:
        str: Enumerator text
    """
    terms = []
    for weight in sorted(counts):
        count = counts[weight]
        if count == 0:
            continue
        if weight == 0:
            terms.append(str(count))
        else:
            coefficient = "" if count == 1 else str(count)
            terms.append(f"{coefficient}{variable}^{weight}")
    return "+".join(terms) if terms else "0"
