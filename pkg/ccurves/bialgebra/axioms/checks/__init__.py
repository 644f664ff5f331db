# bialgebra/axioms/checks/__init__.py
import importlib
import pkgutil

from ....core.log import logger

__path__ = pkgutil.extend_path(__path__, __name__)
for _, module_name, _ in pkgutil.iter_modules(__path__, __name__ + "."):
    try:
        importlib.import_module(module_name)
        logger.debug(f"[Axiom] 已自动导入恒等式模块: {module_name}")
    except Exception as e:
        logger.error(f"[Axiom] 自动导入恒等式模块 {module_name} 失败: {e}")
