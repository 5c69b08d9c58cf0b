#!/usr/bin/env python3
"""
tevs - 命令行入口
"""
import logging
import sys

# 加载环境变量
from load_env import load_dotenv
load_dotenv()

from tevs.cli import run

# 配置日志 (写到标准错误，标准输出只留给报告)
logging.basicConfig(
    level=logging.WARNING,
    format='%(asctime)s | %(name)s | %(levelname)s | %(message)s',
    datefmt='%H:%M:%S',
    stream=sys.stderr
)


if __name__ == "__main__":
    sys.exit(run(sys.argv[1:]))
