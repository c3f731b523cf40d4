class Colors:
    GREEN = "\033[92m"
    RED = "\033[91m"
    WHITE = "\033[97m"
    RESET = "\033[0m"
    DIM = "\033[2m"

    @classmethod
    def status(cls, passed: bool) -> str:
        """Coloured PASS/FAIL tag for report summaries."""
        if passed:
            return f"{cls.GREEN}PASS{cls.RESET}"
        return f"{cls.RED}FAIL{cls.RESET}"

    @classmethod
    def error(cls, message: str) -> str:
        return f"{cls.RED}ERR {message}{cls.RESET}"
