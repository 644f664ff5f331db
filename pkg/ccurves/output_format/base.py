# output_format/base.py
"""输出格式化器与结果载荷的基类"""

import json
from abc import ABC, abstractmethod
from typing import Any, Optional


class ReportPayload(ABC):
    """CLI 每个命令产出的结果载荷"""

    title: str = "ccurves"

    @abstractmethod
    def to_data(self) -> Any:
        """可直接 JSON 序列化的数据"""
        raise NotImplementedError

    @abstractmethod
    def to_text(self) -> str:
        raise NotImplementedError

    def to_json(self) -> str:
        return json.dumps(self.to_data(), separators=(",", ":"), ensure_ascii=False)

    def to_markdown(self) -> str:
        return f"## {self.title}\n\n```\n{self.to_text()}\n```\n"


class BaseOutputFormatter(ABC):
    """输出格式化器基类"""

    @property
    @abstractmethod
    def format_name(self) -> str:
        """格式名称"""
        pass

    @property
    @abstractmethod
    def description(self) -> str:
        """格式描述"""
        pass

    @property
    @abstractmethod
    def file_extension(self) -> str:
        """文件扩展名"""
        pass

    @abstractmethod
    def format_report(self, payload: ReportPayload) -> Optional[str]:
        """
        格式化结果

        Args:
            payload: 命令产出的结果载荷

        Returns:
            格式化后的文本
        """
        pass

    def validate_content(self, content: Optional[str]) -> bool:
        """验证内容是否有效"""
        return content is not None
