import os

# FlaskBase refuses to start without a secret key
os.environ.setdefault("SECRET_KEY", "structura-tests")
