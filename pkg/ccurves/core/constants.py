# core/constants.py
# 这里存储 ccurves 的常量

# 读取metadata.yaml文件内容来同步包信息常量
import os

import yaml

# 获取包根目录
CURRENT_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
# 读取metadata.yaml文件
with open(os.path.join(CURRENT_DIR, "metadata.yaml"), "r", encoding="utf-8") as file:
    metadata = yaml.safe_load(file) or {}

PACKAGE_NAME = metadata.get("name", "ccurves")
PACKAGE_DESCRIPTION = metadata.get("description", "Goldman-Turaev Lie bialgebra on cyclic words")
PACKAGE_VERSION = metadata.get("version", "0.1.0")

# 字母的文本形式: a<k> 为生成元, A<k> 为其逆
GENERATOR_PREFIX = "a"
INVERSE_PREFIX = "A"
WORD_SEPARATOR = "."
