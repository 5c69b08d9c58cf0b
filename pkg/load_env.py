"""
加载 .env 环境变量
"""
import os
from pathlib import Path

from dotenv import load_dotenv as _load_dotenv

TEVS_VARIABLES = ("TEVS_NU", "TEVS_EPSILON", "TEVS_MAX_CONCURRENT", "TEVS_LOG_LEVEL")


def load_dotenv(env_path: Path = Path(__file__).parent / ".env") -> bool:
    """加载 .env 文件中的环境变量，已存在的变量不覆盖"""
    if not env_path.exists():
        return False
    return _load_dotenv(env_path, override=False)


if __name__ == "__main__":
    found = load_dotenv()
    print("✅ 已加载 .env" if found else "ℹ️ 未找到 .env，使用默认配置")

    # 显示配置变量
    print("\n🔑 环境变量状态:")
    for name in TEVS_VARIABLES:
        print(f"   {name}: {os.getenv(name, '未设置')}")
