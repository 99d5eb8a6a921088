"""Tests for the pyfekete library."""
import asyncio
from concurrent.futures import ThreadPoolExecutor
import json

FILE_IO_POOL = ThreadPoolExecutor()


async def get_fixture(file: str):
    """Load a fixtures file as parsed JSON."""
    file_name = "tests/fixtures/{file}.json".format(file=file)

    def read_file():
        with open(file_name) as open_file:
            return json.loads(open_file.read())

    loop = asyncio.get_event_loop()
    return await loop.run_in_executor(FILE_IO_POOL, read_file)
