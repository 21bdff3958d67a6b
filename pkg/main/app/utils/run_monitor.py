import logging
import threading
import time
from dataclasses import dataclass
from typing import Optional

import psutil

logger = logging.getLogger(__name__)

MB = 1024 * 1024


@dataclass
class RunStats:
    """Resource usage of one command run"""
    wall_seconds: float
    cpu_seconds: float
    rss_mb: float
    peak_rss_mb: float


class RunMonitor:
    """Sample this process's memory on a background thread while a block runs"""

    def __init__(self, label: str, sample_interval: float = 0.2):
        self.label = label
        self.sample_interval = sample_interval
        self.process = psutil.Process()
        self.stats: Optional[RunStats] = None
        self._peak_rss = 0
        self._stop = threading.Event()
        self._thread: Optional[threading.Thread] = None
        self._start_wall = 0.0
        self._start_cpu = 0.0

    def _cpu_seconds(self) -> float:
        times = self.process.cpu_times()
        return times.user + times.system

    def _sample(self):
        try:
            rss = self.process.memory_info().rss
        except (psutil.NoSuchProcess, psutil.AccessDenied):
            return
        if rss > self._peak_rss:
            self._peak_rss = rss

    def _monitor_loop(self):
        while not self._stop.wait(self.sample_interval):
            self._sample()

    def __enter__(self) -> "RunMonitor":
        self._start_wall = time.perf_counter()
        self._start_cpu = self._cpu_seconds()
        self._sample()
        self._stop.clear()
        self._thread = threading.Thread(target=self._monitor_loop, daemon=True, name=f"monitor-{self.label}")
        self._thread.start()
        return self

    def __exit__(self, exc_type, exc, tb):
        self._stop.set()
        if self._thread:
            self._thread.join(timeout=2)
        self._sample()
        rss = self.process.memory_info().rss
        self.stats = RunStats(
            wall_seconds=time.perf_counter() - self._start_wall,
            cpu_seconds=self._cpu_seconds() - self._start_cpu,
            rss_mb=rss / MB,
            peak_rss_mb=self._peak_rss / MB,
        )
        if exc_type is None:
            logger.info("📊 %s: %.2fs wall, %.2fs cpu, peak %.1f MB",
                        self.label, self.stats.wall_seconds, self.stats.cpu_seconds, self.stats.peak_rss_mb)
        return False
