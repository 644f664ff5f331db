# output_format/formatters.py
"""具体的输出格式化器实现"""

from typing import Optional

import markdown

from ..config.settings import HTML_REPORT_TEMPLATE
from ..core.constants import PACKAGE_VERSION
from ..core.log import logger
from .base import BaseOutputFormatter, ReportPayload


class TextFormatter(BaseOutputFormatter):
    """纯文本格式化器"""

    @property
    def format_name(self) -> str:
        return "text"

    @property
    def description(self) -> str:
        return "人类可读的纯文本结果"

    @property
    def file_extension(self) -> str:
        return ".txt"

    def format_report(self, payload: ReportPayload) -> Optional[str]:
        return payload.to_text()


class JSONFormatter(BaseOutputFormatter):
    """JSON格式化器 - 紧凑且字节稳定"""

    @property
    def format_name(self) -> str:
        return "json"

    @property
    def description(self) -> str:
        return "紧凑、字节稳定的 JSON 结果"

    @property
    def file_extension(self) -> str:
        return ".json"

    def format_report(self, payload: ReportPayload) -> Optional[str]:
        return payload.to_json()


class MarkdownFormatter(BaseOutputFormatter):
    """Markdown格式化器"""

    @property
    def format_name(self) -> str:
        return "markdown"

    @property
    def description(self) -> str:
        return "Markdown格式报告"

    @property
    def file_extension(self) -> str:
        return ".md"

    def format_report(self, payload: ReportPayload) -> Optional[str]:
        content = payload.to_markdown()
        if not self.validate_content(content):
            logger.warning("[MarkdownFormatter] Markdown内容为空")
            return None
        return content


class HTMLFormatter(BaseOutputFormatter):
    """HTML格式化器 - 将Markdown转换为HTML"""

    @property
    def format_name(self) -> str:
        return "html"

    @property
    def description(self) -> str:
        return "HTML格式报告"

    @property
    def file_extension(self) -> str:
        return ".html"

    def format_report(self, payload: ReportPayload) -> Optional[str]:
        """将载荷的Markdown形式转换为完整的HTML"""
        content = payload.to_markdown()
        if not self.validate_content(content):
            logger.warning("[HTMLFormatter] Markdown内容为空")
            return None

        # 1. Markdown 转 HTML
        html_body = markdown.markdown(content, extensions=["extra", "tables"])

        # 2. 填充模板
        return HTML_REPORT_TEMPLATE.format(
            title=payload.title, content=html_body, version=PACKAGE_VERSION
        )
