# Utilities for gamma-expansions: settings, logging, output documents and
# run monitoring.

from .output import OutputDocument, write_document
from .run_monitor import RunMonitor, RunStats

__all__ = ['OutputDocument', 'write_document', 'RunMonitor', 'RunStats']
