import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components
from typing import Iterable, Tuple

UNDEFINED = -1


def canonical_labels(labels: np.array) -> np.array:
    """
    Rename class labels so that every class is labelled by its least member.

    Entries equal to UNDEFINED (-1) are points outside the domain and stay UNDEFINED.
    """
    labels = np.asarray(labels, dtype=np.int64)
    result = np.full(labels.shape[0], UNDEFINED, dtype=np.int64)
    defined = np.flatnonzero(labels != UNDEFINED)
    if defined.size == 0:
        return result
    keys = labels[defined]
    _, inverse = np.unique(keys, return_inverse=True)
    least = np.full(inverse.max() + 1, np.iinfo(np.int64).max, dtype=np.int64)
    np.minimum.at(least, inverse, defined)
    result[defined] = least[inverse]
    return result


def combine_labels(labels1: np.array, labels2: np.array) -> np.array:
    # a point gets a common key only where both labellings are defined
    labels1 = np.asarray(labels1, dtype=np.int64)
    labels2 = np.asarray(labels2, dtype=np.int64)
    size = labels1.shape[0]
    both = (labels1 != UNDEFINED) & (labels2 != UNDEFINED)
    combined = np.where(both, labels1 * (size + 1) + labels2, UNDEFINED)
    return canonical_labels(combined)


def components_labels(size: int, pairs: Iterable[Tuple[int, int]], domain_mask: np.array) -> np.array:
    """
    Label the classes of the equivalence relation generated by pairs on the points of domain_mask.

    Parameters
    ----------
    size : int
        Number of points of the ambient space.

    pairs : Iterable[Tuple[int, int]]
        Generating pairs. Both ends must lie in the domain.

    domain_mask : np.array
        Boolean mask of the domain.

    Returns
    -------
    labels : np.array
        Canonical labels (least member of each class), UNDEFINED outside the domain.
    """
    pairs = list(pairs)
    rows = np.array([p[0] for p in pairs], dtype=np.int64)
    cols = np.array([p[1] for p in pairs], dtype=np.int64)
    graph = coo_matrix((np.ones(len(pairs)), (rows, cols)), shape=(size, size)).tocsr()
    _, components = connected_components(graph, directed=False)
    labels = np.where(np.asarray(domain_mask, dtype=bool), components, UNDEFINED)
    return canonical_labels(labels)
