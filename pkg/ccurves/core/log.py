# core/log.py
"""包级日志器

所有模块统一 `from ..core.log import logger`，消息以 `[Tag]` 开头。
"""

import logging
import sys

logger = logging.getLogger("ccurves")
logger.addHandler(logging.NullHandler())

_LOG_FORMAT = "%(asctime)s %(levelname)s %(message)s"


def setup_logging(verbosity: int = 0) -> None:
    """根据 -v 次数配置日志输出到 stderr (0=WARNING, 1=INFO, >=2=DEBUG)"""
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = logging.WARNING

    # 重复调用时不叠加 handler
    for handler in list(logger.handlers):
        if isinstance(handler, logging.StreamHandler) and not isinstance(
            handler, logging.NullHandler
        ):
            logger.removeHandler(handler)

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(_LOG_FORMAT))
    logger.addHandler(handler)
    logger.setLevel(level)
