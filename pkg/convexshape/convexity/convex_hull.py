import numpy as np


def _cross(o: np.ndarray, a: np.ndarray, b: np.ndarray) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull_2d(points: np.ndarray) -> np.ndarray:
    """
    Indices of the hull vertices in counterclockwise order (monotone chain).
    Collinear points on hull edges are not reported.
    """
    points = np.asarray(points, dtype=float)
    order = np.lexsort((points[:, 1], points[:, 0]))
    if len(order) < 3:
        return order

    def half(indices):
        chain = []
        for idx in indices:
            while len(chain) >= 2 and _cross(points[chain[-2]], points[chain[-1]], points[idx]) <= 0:
                chain.pop()
            chain.append(int(idx))
        return chain

    lower = half(order)
    upper = half(order[::-1])
    return np.array(lower[:-1] + upper[:-1], dtype=np.int64)
