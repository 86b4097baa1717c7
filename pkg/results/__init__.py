from results.db import ResultsDb, load_db, save_db, db_record, db_get, db_check, db_list, DEFAULT_DB
from results.chain import ChainEntry, ChainReport, verify_chain, compare_bounds, MODES
