# config/settings.py
"""ccurves 配置设置"""

# 默认配置
DEFAULT_CONFIG = {
    # LP2 幂次上界的额外放宽量 (j_max, k_max 各加 bound_slack)
    "bound_slack": 0,
    # 严格模式: o 函数在非约化输入上取 0
    "strict_o": False,
    "threads": 1,
    # 扫描按前缀切分的深度
    "partition_depth": 2,
    "axiom_samples": 500,
    "axiom_max_len": 8,
    "default_output_format": "text",
}

# 具名曲面预设: 名称 -> (genus, boundary)
SURFACE_PRESETS = {
    "punctured_torus": (1, 1),
    "pair_of_pants": (0, 3),
    "twice_punctured_torus": (1, 2),
    "genus_two": (2, 1),
}

# 支持的输出格式
SUPPORTED_OUTPUT_FORMATS = {
    "text": {
        "name": "纯文本",
        "description": "人类可读的纯文本结果",
        "extension": ".txt",
    },
    "json": {
        "name": "JSON",
        "description": "紧凑、字节稳定的 JSON 结果",
        "extension": ".json",
    },
    "markdown": {
        "name": "Markdown文本",
        "description": "Markdown格式报告",
        "extension": ".md",
    },
    "html": {
        "name": "HTML页面",
        "description": "HTML格式报告",
        "extension": ".html",
    },
}

# 退出码
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BAD_WORD = 2
EXIT_BAD_SURFACE = 3
EXIT_CHECK_FAILED = 4

# HTML 报告模板
HTML_REPORT_TEMPLATE = """
<!DOCTYPE html>
<html>
<head>
<meta charset="UTF-8">
<title>{title}</title>
<style>
  body {{
    font-family: -apple-system, BlinkMacSystemFont, "Segoe UI", Roboto, Helvetica, Arial, sans-serif;
    line-height: 1.6;
    color: #333;
    background-color: #f9f9f9;
    padding: 20px;
    max-width: 900px;
    margin: 20px auto;
    border: 1px solid #eee;
    border-radius: 8px;
  }}
  h1, h2, h3 {{ color: #0056b3; border-bottom: 1px solid #eee; padding-bottom: 5px;}}
  h1 {{ text-align: center; }}
  table {{ border-collapse: collapse; }}
  th, td {{ border: 1px solid #ddd; padding: 4px 10px; }}
  code {{ background-color: #eee; padding: 2px 4px; border-radius: 3px; font-size: 0.9em;}}
  .footer {{ margin-top: 30px; font-size: 0.8em; color: #777; text-align: center; border-top: 1px solid #eee; padding-top: 10px;}}
</style>
</head>
<body>
  <h1>{title}</h1>
  {content}
  <div class="footer">Generated by ccurves {version}</div>
</body>
</html>
"""
