#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Logger.py
"""
Description: Logger class writing toolkit messages to a log file and diagnostics to standard error.
Author: Iker Vazquez
Email: iker-vazquez@users.noreply.github.com
Date: 2023-10-29
"""

import logging
import os
import sys
import json

from enum import Enum


class LoggerLevel(Enum):
    """Logging levels understood by config.json."""
    DEBUG = 10
    INFO = 20
    WARNING = 30
    ERROR = 40
    CRITICAL = 50


class Logger:
    """
    Logger class for handling log messages.

    *Attributes*:
    - debug_level --> int : Class-wide minimum level written to the log file.
    - console_level --> int : Class-wide minimum level echoed to standard error.
    - log_file_path --> str : Log file configured in config.json.

    *Methods*:
    - load_configuration(config_path) --> Reads the debugConfig section.
    - write_debug / write_info / write_warning / write_error / write_critical --> Level-gated writers.
    - get_debug_level() --> Returns the class-wide debug level.
    """

    # region Global params
    LOGGER_NAME: str = 'grand_norms'
    debug_level: int = LoggerLevel.DEBUG.value
    console_level: int = LoggerLevel.WARNING.value
    log_file_path: str = './logs/logFile.log'
    # endregion Global params

    def __init__(self, log_file: str = None, config_json: str = './config.json') -> None:
        """
        Initializes the Logger instance.

        *Arguments*:
        - log_file --> str : Path to the log file. When None the path from config.json is used.
        - config_json --> str : Path to the configuration JSON file.

        *Returns*:
        - None

        *Examples*:
        - logger = Logger()
        - logger = Logger('/tmp/grand_norms/test.log', '/path/to/config.json')

        *Notes*:
        - Creates the log directory if it does not exist.
        - Handlers are installed once per target, so repeated instances share them.
        """
        config_warning = self.load_configuration(config_json)
        target = log_file if log_file is not None else Logger.log_file_path

        directory = os.path.dirname(target)
        if directory:
            os.makedirs(directory, exist_ok=True)

        self._logger = logging.getLogger(Logger.LOGGER_NAME)
        self._logger.setLevel(logging.DEBUG)
        self._logger.propagate = False
        self._install_handlers(os.path.abspath(target))

        if config_warning:
            self.write_warning(config_warning)

    def _install_handlers(self, target: str) -> None:
        formatter = logging.Formatter(
            fmt=(
                '%(asctime)s - [%(filename)s][%(name)s:%(funcName)s] - '
                '%(levelname)s \t- %(message)s'
            ),
            datefmt='%Y-%m-%d %H:%M:%S'
        )
        has_file = any(
            isinstance(h, logging.FileHandler) and h.baseFilename == target
            for h in self._logger.handlers
        )
        if not has_file:
            file_handler = logging.FileHandler(target)
            file_handler.setFormatter(formatter)
            self._logger.addHandler(file_handler)

        console = [h for h in self._logger.handlers if getattr(h, 'grand_norms_console', False)]
        if not console:
            stream_handler = logging.StreamHandler(sys.stderr)
            stream_handler.grand_norms_console = True
            stream_handler.setFormatter(logging.Formatter('%(levelname)s: %(message)s'))
            self._logger.addHandler(stream_handler)
            console = [stream_handler]
        for handler in console:
            handler.setLevel(Logger.console_level)

    def load_configuration(self, config_path: str) -> str:
        """
        Loads the debugConfig section from a JSON file.

        *Arguments*:
        - config_path --> str : Path to the configuration JSON file.

        *Returns*:
        - str : A warning message when the defaults had to be used, otherwise an empty string.

        *Examples*:
        - load_configuration('/path/to/config.json')

        *Notes*:
        - Sets the debug level, console level and log file path for every Logger instance.
        """
        try:
            with open(config_path, 'r') as config_file:
                config = json.load(config_file)
                debug_config = config.get("debugConfig", {})
                Logger.debug_level = debug_config.get("debugLevel", LoggerLevel.DEBUG.value)
                Logger.console_level = debug_config.get("consoleLevel", LoggerLevel.WARNING.value)
                Logger.log_file_path = debug_config.get("logFilePath", './logs/logFile.log')
                return ""
        except (FileNotFoundError, json.JSONDecodeError) as e:
            Logger.debug_level = LoggerLevel.DEBUG.value
            Logger.console_level = LoggerLevel.WARNING.value
            Logger.log_file_path = './logs/logFile.log'
            return f"Could not read {config_path}, using default logging configuration: {e}"

    def _write(self, level: LoggerLevel, message: str) -> None:
        """
        Writes message when level reaches the debugLevel of config.json.

        *Arguments*:
        - level --> LoggerLevel : Severity of the record.
        - message --> str : Text of the record.

        *Notes*:
        - stacklevel=3 attributes the record to the caller of the public writer.
        """
        if Logger.debug_level <= level.value:
            self._logger.log(level.value, message, stacklevel=3)

    def write_debug(self, message: str) -> None:
        """
        Logs a debug message.
        Only if debugLevel on config.json is less or equal to DEBUG level.

        *Arguments*:
        - message --> str : The debug message to log.

        *Returns*:
        - None

        *Examples*:
        - logger.write_debug("grand_norm bracket [1.3211, 1.3211]")
        """
        self._write(LoggerLevel.DEBUG, message)

    def write_info(self, message: str) -> None:
        """
        Logs an info message.
        Only if debugLevel on config.json is less or equal to INFO level.

        *Arguments*:
        - message --> str : The info message to log.

        *Returns*:
        - None

        *Examples*:
        - logger.write_info("SmallNormCalculator initialized.")
        """
        self._write(LoggerLevel.INFO, message)

    def write_warning(self, message: str) -> None:
        """
        Logs a warning message.
        Only if debugLevel on config.json is less or equal to WARNING level.

        *Arguments*:
        - message --> str : The warning message to log.

        *Returns*:
        - None

        *Examples*:
        - logger.write_warning("Suite lattice: 2 inconclusive records")
        """
        self._write(LoggerLevel.WARNING, message)

    def write_error(self, message: str) -> None:
        """
        Logs an error message.
        Only if debugLevel on config.json is less or equal to ERROR level.

        *Arguments*:
        - message --> str : The error message to log.

        *Returns*:
        - None

        *Examples*:
        - logger.write_error("Suite holder_seq: 1 failing records")

        *Notes*:
        - The CLI also echoes errors to standard error.
        """
        self._write(LoggerLevel.ERROR, message)

    def write_critical(self, message: str) -> None:
        """
        Logs a critical message.
        Only if debugLevel on config.json is less or equal to CRITICAL level.

        *Arguments*:
        - message --> str : The critical message to log.

        *Returns*:
        - None

        *Examples*:
        - logger.write_critical("Dependency mpmath could not be installed")
        """
        self._write(LoggerLevel.CRITICAL, message)

    @classmethod
    def get_debug_level(cls) -> int:
        """Gets the current debug level for logging.

        *Arguments*:
        - None

        *Returns*:
        - debug level (int): The current logging level set in Logger.

        *Examples*:
        - Logger.get_debug_level()
        """
        return cls.debug_level
