"""In-process worker pool for slots and islands."""

from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

T = TypeVar("T")
R = TypeVar("R")


class WorkerPool:
    """Order-preserving map over a thread pool; one worker runs inline."""

    def __init__(self, workers: int = 1):
        """Create the pool.

        Args:
            workers: Thread count; 1 runs everything in the calling thread

        Raises:
            ValueError: If ``workers`` is below 1
        """
        if workers < 1:
            raise ValueError(f"workers must be at least 1, got {workers}")
        self.workers = workers
        self._executor: ThreadPoolExecutor | None = None
        if workers > 1:
            self._executor = ThreadPoolExecutor(
                max_workers=workers, thread_name_prefix="islandde"
            )

    def map(self, func: Callable[[T], R], items: Iterable[T]) -> list[R]:
        """Apply ``func`` to every item; results keep the input order."""
        if self._executor is None:
            return [func(item) for item in items]
        return list(self._executor.map(func, items))

    def close(self) -> None:
        if self._executor is not None:
            self._executor.shutdown(wait=True)
            self._executor = None

    def __enter__(self) -> "WorkerPool":
        return self

    def __exit__(self, *exc_info: object) -> None:
        self.close()


INLINE = WorkerPool(1)
