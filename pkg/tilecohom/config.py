from pydantic_settings import BaseSettings, SettingsConfigDict

class Settings(BaseSettings):
    PROJECT_NAME: str = "tilecohom"
    LOG_LEVEL: str = "WARNING"
    JSON_INDENT: int = 2

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="TILECOHOM_",
        extra="ignore"
    )

settings = Settings()
