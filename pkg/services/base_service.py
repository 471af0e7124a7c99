"""Common base for disttv services: a class-named logger and uniform error reporting."""
import logging
from abc import ABC, abstractmethod
from typing import Any, Dict, Iterable, Optional

from utils.errors import DistTvError


class BaseService(ABC):
    def __init__(self):
        self.logger = logging.getLogger(self.__class__.__name__)

    def handle_error(self, error: Exception, context: Optional[Dict[str, Any]] = None) -> None:
        """Log an error with its context; the caller re-raises.

        Input errors (DistTvError, OSError) log a traceback only at DEBUG.
        """
        message = f"{type(error).__name__}: {error}"
        if context:
            details = ", ".join(f"{key}={value}" for key, value in context.items())
            message += f" [{details}]"
        expected = isinstance(error, (DistTvError, OSError))
        self.logger.error(message, exc_info=not expected or self.logger.isEnabledFor(logging.DEBUG))

    def validate_input(self, data: Any, required_fields: Iterable[str]) -> bool:
        """True when data is a mapping holding every required field."""
        if not isinstance(data, dict):
            self.logger.error(f"Expected a JSON object, got {type(data).__name__}")
            return False
        missing = [name for name in required_fields if name not in data]
        if missing:
            self.logger.error(f"Missing required fields: {missing}")
            return False
        return True

    @abstractmethod
    def initialize(self) -> None:
        """Create service-specific resources."""
