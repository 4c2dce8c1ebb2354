function loadGraphics(loader) {
    loader.atlas('spriteset', 'assets/spriteset.png', 'assets/spriteset.jsona');
    loader.image('tweet', 'assets/twit.png');
}

function loadSounds(loader) {
    loader.audio('sfx', ['assets/sfx.mp3', 'assets/sfx.ogg', 'assets/sfx.wav', 'assets/sfx.m4a']);
}

loadGraphics(this.load);
loadSounds(this.load);
