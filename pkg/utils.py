import json
import os


def second2hours(seconds):
    h = seconds//3600
    seconds %= 3600
    m = seconds//60
    seconds %= 60

    hms = '{:d} H : {:d} Min : {:.2f} S'.format(int(h), int(m), seconds)
    return hms


def dict2string(payload):
    parts = []
    for key, value in payload.items():
        if isinstance(value, float):
            parts.append(key+' {:.4f}'.format(value))
        elif isinstance(value, (dict, list, tuple)):
            parts.append(key+' '+json.dumps(value, separators=(',', ':')))
        else:
            parts.append(key+' {}'.format(value))
    return ', '.join(parts)


def mkdir(dir):
    if dir and not os.path.exists(dir):
        os.makedirs(dir)


def open_log(outdir, banner):
    mkdir(outdir)
    log_file_path = os.path.join(outdir, 'log.txt')
    with open(log_file_path, 'a') as log_file:
        log_file.write('\n---------------  '+banner+'  ---------------\n')
    return log_file_path


def log_line(log_file_path, text, quiet=False):
    """Print a summary line and append it to the run log."""
    if not quiet:
        print(text)
    if log_file_path:
        with open(log_file_path, 'a') as log_file:
            log_file.write(text+'\n')


def dump_json(path, obj):
    """Write JSON through a temporary file and an atomic rename."""
    mkdir(os.path.dirname(path))
    tmp = path+'.tmp'
    with open(tmp, 'w') as f:
        json.dump(obj, f, indent=2)
    os.replace(tmp, path)
    return path
